// Acceptance suite: one PASS/FAIL line per criterion. Comparisons are exact
// except the Dobinski series in criterion 13 (absolute tolerance below).

#include "genbell/catalog.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#ifndef GENBELL_CLI
#error "GENBELL_CLI must name the CLI binary"
#endif

namespace {

constexpr int max_failures_shown = 8;

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_cli_to(const std::filesystem::path& out)
{
    const std::string cmd = std::string("\"") + GENBELL_CLI + "\" verify --all > \"" + out.string() + "\"";
    const int status = std::system(cmd.c_str());
    return status != -1 && WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool criterion_cli()
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / ("genbell_verify_a_" + std::to_string(::getpid()) + ".txt");
    const auto b = dir / ("genbell_verify_b_" + std::to_string(::getpid()) + ".txt");
    const int ca = run_cli_to(a);
    const int cb = run_cli_to(b);
    const std::string sa = slurp(a), sb = slurp(b);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    const bool stable = sa == sb && !sa.empty();
    std::cout << "     exit codes " << ca << ", " << cb << "; output " << sa.size() << " bytes, "
              << (stable ? "byte-identical" : "differs") << '\n';
    return ca == 0 && cb == 0 && stable;
}

} // namespace

int main()
{
    using namespace genbell::catalog;
    int failed = 0;
    std::cout << "dobinski tolerance " << dobinski_tolerance << ", series epsilon " << dobinski_epsilon << " (absolute); all other comparisons exact\n";
    for (const auto& crit : acceptance_criteria()) {
        const auto t0 = std::chrono::steady_clock::now();
        Report r;
        crit.run(r);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream head;
        head << (r.ok() ? "PASS" : "FAIL") << " criterion " << crit.id << ": " << crit.title << " ("
             << r.checks().size() - r.failures() << '/' << r.checks().size() << " checks, " << secs << " s)";
        std::cout << head.str() << '\n';
        int shown = 0;
        for (const auto& c : r.checks())
            if (!c.pass && shown++ < max_failures_shown) std::cout << "     " << c.line() << '\n';
        if (r.failures() > max_failures_shown)
            std::cout << "     ... " << r.failures() - max_failures_shown << " more failures\n";
        for (const auto& c : r.checks())
            if (c.identity == "sign-convention") std::cout << "     " << c.line() << '\n';
        failed += r.ok() ? 0 : 1;
    }
    const bool cli = criterion_cli();
    std::cout << (cli ? "PASS" : "FAIL") << " criterion 14: verify --all exits 0 and is byte-stable\n";
    failed += cli ? 0 : 1;
    std::cout << (14 - failed) << "/14 criteria pass\n";
    return failed == 0 ? 0 : 1;
}
