#include "genbell/io.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace genbell;
using nlohmann::ordered_json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args)
{
    Run r;
    const std::string cmd = std::string("\"") + GENBELL_CLI + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '\n') {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    if (start < s.size()) out.push_back(s.substr(start));
    return out;
}

} // namespace

TEST(Io, TableCsvAndJson)
{
    const auto t = gstirling_table(1, 1, 2);
    EXPECT_EQ(io::table_csv(t), "n,k,value\n0,0,1\n1,0,-1\n1,1,-1\n2,0,0\n2,1,2\n2,2,1\n");
    const auto j = io::table_json(gstirling_table(Rational(1, 2), -3, 1));
    EXPECT_EQ(j.dump(), R"({"alpha":"1/2","beta":"-3","rows":[["1"],["-1/2","3"]]})");
}

TEST(Io, EveryRationalParsesBack)
{
    const auto j = io::table_json(gstirling_table(Rational(-3, 2), Rational(1, 3), 8));
    for (const auto& row : j["rows"])
        for (const auto& v : row) EXPECT_EQ(to_string(parse_rational(v.get<std::string>())), v.get<std::string>());
}

TEST(Io, RegionReportSchema)
{
    const auto j = io::region_report_json(check_theorem3(FamilyParams(0, -1), 3, Rational(1, 64)));
    EXPECT_EQ(j["alpha"], "0");
    EXPECT_EQ(j["region"], "A");
    ASSERT_EQ(j["results"].size(), 3u);
    const auto& row = j["results"][1];
    EXPECT_EQ(row["n"], 2);
    EXPECT_EQ(row["all_real"], true);
    EXPECT_EQ(row["asserted"], true);
    EXPECT_EQ(row["roots"].size(), 2u);
}

TEST(Cli, TableExamples)
{
    auto r = cli("table --alpha 0 --beta -1 --nmax 2 --format csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,2\n2,2,1\n");

    r = cli("table --alpha 1 --beta 1 --nmax 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,k,value\n0,0,1\n1,0,-1\n1,1,-1\n");

    r = cli("table --alpha 0 --beta 1 --nmax 3 --format json");
    EXPECT_EQ(r.code, 0);
    const auto j = ordered_json::parse(r.out);
    for (unsigned n = 0; n <= 3; ++n)
        for (unsigned k = 0; k <= n; ++k)
            EXPECT_EQ(j["rows"][n][k], k == n ? (n % 2 ? "-1" : "1") : "0");
}

TEST(Cli, PolyAndFamily)
{
    auto r = cli("poly --alpha 0 --beta 1 --n 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).at(0), "0, 0, 0, 0, 1");

    r = cli("family laguerre --lambda 0 --n 2");
    EXPECT_EQ(r.code, 0);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 3u);
    EXPECT_EQ(l[0], "1, 2, 1/2");
    EXPECT_EQ(l[1], "(x^2 + 4x + 2)/2");
    EXPECT_EQ(l[2].rfind("note: ", 0), 0u);

    r = cli("family assoc-lah --m 1 --n 2 --format json");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(ordered_json::parse(r.out)["coefficients"], ordered_json::array({"0", "2", "1"}));

    EXPECT_EQ(cli("family U --n 1").out, "1/2, 1/2\n(x + 1)/2\n");
}

TEST(Cli, Zeros)
{
    const auto r = cli("zeros --alpha -1 --beta -1 --nmax 10 --format json");
    EXPECT_EQ(r.code, 0);
    const auto j = ordered_json::parse(r.out);
    EXPECT_EQ(j["region"], "A");
    ASSERT_EQ(j["results"].size(), 10u);
    for (const auto& row : j["results"]) {
        EXPECT_EQ(row["asserted"], true);
        EXPECT_EQ(row["all_real"], true);
    }
    EXPECT_EQ(cli("zeros --alpha -1 --beta -1 --nmax 6 --newton").code, 0);
}

TEST(Cli, Eval)
{
    const auto r = cli("eval --alpha 0 --beta -1 --n 2 --x 2 --format json");
    EXPECT_EQ(r.code, 0);
    const auto j = ordered_json::parse(r.out);
    EXPECT_EQ(j["exact"], "8");
    EXPECT_NEAR(std::stod(j["dobinski"].get<std::string>()), 8.0, 1e-10);
}

TEST(Cli, VerifyExamples)
{
    auto r = cli("verify --identity t4 --alpha -1/2 --beta -1/2 --nmax 6");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

    r = cli("verify --identity p5 --alpha 2 --beta -3 --nmax 10");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

    r = cli("verify --identity p4-lah --nmax 6");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sign=summation-index"), std::string::npos);

    r = cli("verify --identity composition --alpha 1 --beta -1 --alpha2 0 --beta2 -2 --nmax 6");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("rejects=free-index"), std::string::npos);
}

TEST(Cli, VerifyFailureExitCode)
{
    const auto r = cli("verify --identity bell-op --alpha 2 --beta -3 --nmax 2");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("FAIL bell-op"), std::string::npos);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(cli("table --alpha 0 --beta 0").code, 2);
    EXPECT_EQ(cli("table --alpha 0.5 --beta 1").code, 2);
    EXPECT_EQ(cli("poly --alpha 1 --beta 1/0 --n 2").code, 2);
    EXPECT_EQ(cli("table --beta 1").code, 2);
    EXPECT_EQ(cli("table --alpha 1 --beta 1 --format xml").code, 2);
    EXPECT_EQ(cli("verify --identity nope").code, 2);
    EXPECT_EQ(cli("verify").code, 2);
    EXPECT_EQ(cli("family W --n 2").code, 2);
    EXPECT_EQ(cli("eval --alpha 1 --beta 1 --n 2 --x 1 --epsilon abc").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
}

TEST(Cli, OutputFile)
{
    const auto path = std::filesystem::temp_directory_path() / "genbell_cli_output_test.csv";
    EXPECT_EQ(cli("table --alpha 0 --beta -1 --nmax 1 --output " + path.string()).code, 0);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(text, "n,k,value\n0,0,1\n1,0,0\n1,1,1\n");
    std::filesystem::remove(path);
    EXPECT_EQ(cli("table --alpha 0 --beta -1 --nmax 1 --output /nonexistent-dir/x.csv").code, 1);
}

TEST(Cli, Deterministic)
{
    const auto a = cli("verify --identity c3 --alpha 1/3 --beta -2 --nmax 6");
    const auto b = cli("verify --identity c3 --alpha 1/3 --beta -2 --nmax 6");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}
