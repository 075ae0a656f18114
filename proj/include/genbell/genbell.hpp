#pragma once

#include "genbell/exact.hpp"
#include "genbell/family.hpp"
#include "genbell/gf_derivative.hpp"
#include "genbell/operators.hpp"
#include "genbell/qpolynomial.hpp"
#include "genbell/real_zeros.hpp"
#include "genbell/series.hpp"
#include "genbell/stirling.hpp"
