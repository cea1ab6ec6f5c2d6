#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli/cli.hpp"
#include "cli/grid.hpp"
#include "divorient/exact.hpp"
#include "divorient/simulate.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = divorient::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("divorient_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    static std::string slurp(const std::string& p)
    {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void write(const std::string& p, const std::string& text) const { std::ofstream(p) << text; }

    fs::path dir_;
};

std::size_t count_lines(const std::string& s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(Grid, Parsing)
{
    using divorient::cli::parse_real_grid;
    using divorient::cli::parse_uint_grid;
    EXPECT_EQ(parse_uint_grid("256..1024:256"), (std::vector<std::uint32_t>{256, 512, 768, 1024}));
    EXPECT_EQ(parse_uint_grid("5,10,20"), (std::vector<std::uint32_t>{5, 10, 20}));
    EXPECT_EQ(parse_uint_grid("3..5"), (std::vector<std::uint32_t>{3, 4, 5}));
    EXPECT_EQ(parse_real_grid("0.1,0.5").size(), 2u);
    EXPECT_EQ(parse_real_grid("0.1..0.5:0.1").size(), 5u);
    EXPECT_THROW(parse_uint_grid("5..1"), std::invalid_argument);
    EXPECT_THROW(parse_uint_grid("a"), std::invalid_argument);
    EXPECT_THROW(parse_uint_grid("-3"), std::invalid_argument);
    EXPECT_THROW(parse_uint_grid("1,,2"), std::invalid_argument);
    EXPECT_THROW(parse_real_grid("0.1..0.5:0"), std::invalid_argument);
}

TEST_F(CliTest, ExactFive)
{
    const auto r = run({"exact", "--n", "5", "--rho", "0.5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("5,2,1,2,-2\n"), std::string::npos);
    EXPECT_NE(r.out.find("expectation=1.5\n"), std::string::npos);
}

TEST_F(CliTest, ExactRowsAndFile)
{
    EXPECT_EQ(run({"exact", "--n", "1"}).out, "1,0,1\n");
    const auto out = path("nine.csv");
    const auto r = run({"exact", "--n", "9", "--out", out});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(slurp(out), "9,8,1,12,-6,-18,17,10,-36,28,-7\n");
}

TEST_F(CliTest, ExactOverLimit)
{
    const auto r = run({"exact", "--n", "30"});
    EXPECT_NE(r.code, 0);
    EXPECT_NE(r.err.find("81 edges"), std::string::npos);
}

TEST_F(CliTest, SimRowCounts)
{
    const auto out = path("lscc.csv");
    ASSERT_EQ(run({"sim", "--stat", "lscc", "--n", "64..640:64", "--rho", "0.1,0.2,0.3,0.4,0.5", "--samples", "3",
                   "--seed", "1", "--out", out})
                  .code,
              0);
    EXPECT_EQ(count_lines(slurp(out)), 2u + 10u * 5u);

    const auto r = run({"sim", "--stat", "lscc", "--n", "5", "--rho", "0", "--samples", "3"});
    EXPECT_EQ(r.code, 0);
    std::istringstream in(r.out);
    const auto table = divorient::read_sim_csv(in);
    ASSERT_EQ(table.records.size(), 1u);
    EXPECT_EQ(table.records[0].mean, 1.0);
}

TEST_F(CliTest, SimDiameterGrid)
{
    const auto out = path("diam.csv");
    ASSERT_EQ(run({"sim", "--stat", "diameter", "--n", "256..4096:256", "--rho", "0.5", "--samples", "2", "--seed", "7",
                   "--out", out})
                  .code,
              0);
    std::ifstream in(out);
    EXPECT_EQ(divorient::read_sim_csv(in).records.size(), 16u);
}

TEST_F(CliTest, SimUnwritablePath)
{
    const auto r = run({"sim", "--stat", "lscc", "--n", "5", "--rho", "0.5", "--samples", "2", "--out",
                        path("missing/dir/out.csv")});
    EXPECT_NE(r.code, 0);
    EXPECT_FALSE(fs::exists(path("missing")));
}

TEST_F(CliTest, SimRejectsBadGrid)
{
    EXPECT_NE(run({"sim", "--stat", "lscc", "--n", "10,5"}).code, 0);
    EXPECT_NE(run({"sim", "--stat", "mode"}).code, 0);
    EXPECT_NE(run({"sim", "--stat", "lscc", "--rho", "2"}).code, 0);
}

TEST_F(CliTest, HelpDocumentsConventions)
{
    for (const std::string cmd : {"exact", "sim", "bounds", "tau", "fit", "plot"}) {
        const auto r = run({cmd, "--help"});
        EXPECT_EQ(r.code, 0) << cmd;
        EXPECT_NE(r.out.find("largest strongly connected component"), std::string::npos) << cmd;
        EXPECT_NE(r.out.find("SplitMix64"), std::string::npos) << cmd;
    }
    EXPECT_NE(run({}).code, 0);
}

TEST_F(CliTest, Bounds)
{
    const auto cor5 = run({"bounds", "--n", "4096", "--rho", "0.5", "--mode", "cor5"});
    EXPECT_EQ(cor5.code, 0);
    EXPECT_NE(cor5.out.find("\ncor5,4096,0.5,"), std::string::npos);

    const auto cor4 = run({"bounds", "--n", "100", "--rho", "0.5", "--mode", "cor4", "--epsilon", "0.5"});
    EXPECT_EQ(cor4.code, 0);
    EXPECT_NE(cor4.out.find(",false\n"), std::string::npos);

    EXPECT_NE(run({"bounds", "--n", "100", "--mode", "cor4"}).code, 0);
    EXPECT_NE(run({"bounds", "--n", "100", "--mode", "cor4", "--epsilon", "1.5"}).code, 0);
    EXPECT_NE(run({"bounds", "--n", "100", "--mode", "nope"}).code, 0);

    const auto all = run({"bounds", "--n", "9", "--rho", "0.5"});
    EXPECT_EQ(all.code, 0);
    EXPECT_EQ(count_lines(all.out), 4u);
}

TEST_F(CliTest, BoundsTheoremOneBelowExact)
{
    const auto r = run({"bounds", "--n", "9", "--rho", "0.5", "--mode", "theorem1"});
    ASSERT_EQ(r.code, 0);
    const auto row = r.out.substr(r.out.find('\n') + 1);
    std::vector<std::string> fields;
    std::stringstream ss(row);
    for (std::string f; std::getline(ss, f, ',');)
        fields.push_back(f);
    ASSERT_EQ(fields.size(), 7u);
    const double value = std::stod(fields[5]);
    EXPECT_LE(value, divorient::evaluate(divorient::exact_expectation_polynomial(9), 0.5));
}

TEST_F(CliTest, Tau)
{
    const auto r = run({"tau", "--n", "10", "--at-least", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "tau>=4: 3\n");

    const auto one = run({"tau", "--n", "1"});
    EXPECT_EQ(one.code, 0);
    EXPECT_NE(one.out.find("tau,count\n1,1\n"), std::string::npos);

    const auto c = run({"tau", "--constants"});
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("S_V"), std::string::npos);
    EXPECT_NE(c.out.find("M=0.26149721284"), std::string::npos);
    EXPECT_NE(run({"tau"}).code, 0);
}

TEST_F(CliTest, FitAffine)
{
    divorient::SimTable t{divorient::Statistic::diameter, 3, {}};
    for (std::uint32_t n : {1024u, 2048u, 4096u}) {
        divorient::SimRecord r;
        r.n = n;
        r.rho = 0.5;
        r.samples = 10;
        r.mean = 2 * std::log(double(n)) + 3;
        r.statistic = t.statistic;
        t.records.push_back(r);
    }
    std::ostringstream os;
    divorient::write_sim_csv(os, t);
    const auto in = path("affine.csv");
    write(in, os.str());
    const auto fit = path("fit.csv");
    const auto r = run({"fit", "--in", in, "--out", fit});
    EXPECT_EQ(r.code, 0) << r.err;
    std::stringstream fs(slurp(fit));
    std::string header, row;
    std::getline(fs, header);
    std::getline(fs, row);
    EXPECT_EQ(header, "alpha,beta,mse");
    double a = 0, b = 0, m = 0;
    char c1, c2;
    std::istringstream(row) >> a >> c1 >> b >> c2 >> m;
    EXPECT_NEAR(a, 2.0, 1e-12);
    EXPECT_NEAR(b, 3.0, 1e-11);
    EXPECT_NEAR(m, 0.0, 1e-20);

    t.records.resize(1);
    std::ostringstream os1;
    divorient::write_sim_csv(os1, t);
    write(in, os1.str());
    EXPECT_NE(run({"fit", "--in", in}).code, 0);
}

TEST_F(CliTest, PlotSccRatio)
{
    const auto csv = path("lscc.csv");
    ASSERT_EQ(run({"sim", "--stat", "lscc", "--n", "64..512:64", "--rho", "0.2,0.5", "--samples", "3", "--out", csv}).code,
              0);
    const auto svg = path("ratio.svg");
    const auto r = run({"plot", "--in", csv, "--kind", "scc_ratio", "--bound", "--out", svg});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto text = slurp(svg);
    EXPECT_EQ(text.rfind("<?xml", 0), 0u);
    EXPECT_NE(text.find("</svg>"), std::string::npos);
    std::size_t series = 0;
    for (auto pos = text.find("class=\"series\""); pos != std::string::npos; pos = text.find("class=\"series\"", pos + 1))
        ++series;
    EXPECT_EQ(series, 2u);
}

TEST_F(CliTest, PlotDiameterFitMatchesFit)
{
    const auto csv = path("diam.csv");
    ASSERT_EQ(run({"sim", "--stat", "diameter", "--n", "512..4096:512", "--rho", "0.5", "--samples", "3", "--out", csv})
                  .code,
              0);
    const auto svg = path("diam.svg");
    ASSERT_EQ(run({"plot", "--in", csv, "--kind", "diameter", "--fit", "--out", svg}).code, 0);
    const auto text = slurp(svg);
    const std::regex line_re("class=\"overlay-fit\"[^>]*data-slope=\"([^\"]+)\"");
    std::smatch m;
    ASSERT_TRUE(std::regex_search(text, m, line_re));
    const std::string rest = m.suffix();
    EXPECT_FALSE(std::regex_search(rest, line_re));

    const auto fit = run({"fit", "--in", csv});
    ASSERT_EQ(fit.code, 0);
    const auto row = fit.out.substr(fit.out.find("alpha,beta,mse\n") + 15);
    EXPECT_EQ(m[1].str(), row.substr(0, row.find(',')));
}

TEST_F(CliTest, PlotRejectsBadInput)
{
    const auto empty = path("empty.csv");
    write(empty, "");
    const auto svg = path("out.svg");
    EXPECT_NE(run({"plot", "--in", empty, "--kind", "scc_ratio", "--out", svg}).code, 0);
    EXPECT_FALSE(fs::exists(svg));

    const auto junk = path("junk.csv");
    write(junk, "hello\nworld\n");
    EXPECT_NE(run({"plot", "--in", junk, "--kind", "diameter", "--out", svg}).code, 0);
    EXPECT_FALSE(fs::exists(svg));
    EXPECT_NE(run({"plot", "--in", path("nope.csv"), "--kind", "diameter", "--out", svg}).code, 0);
}
