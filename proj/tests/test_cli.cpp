#include "doctest.h"

#include "citerank/cli.hpp"
#include "support.hpp"

#include <sstream>

using citerank::cli::run_command;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    for (auto& a : args) {
        if (a.starts_with("@")) {
            a = test_support::fixture(a.substr(1)).string();
        }
    }
    std::ostringstream out, err;
    Run r;
    r.code = run_command(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::vector<std::string> kStudy{"--docs", "@laureates/docs.csv", "--subjects",
                                      "@laureates/subjects.csv"};

std::vector<std::string> study(std::string sub, std::vector<std::string> extra) {
    std::vector<std::string> args{"study", std::move(sub)};
    args.insert(args.end(), kStudy.begin(), kStudy.end());
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

} // namespace

TEST_CASE("pagerank on a 5-cycle reports uniform scores") {
    const auto r = run({"pagerank", "--edges", "@cycle5.csv"});
    CHECK(r.code == 0);
    std::size_t hits = 0;
    for (auto pos = r.out.find("0.200000000000"); pos != std::string::npos;
         pos = r.out.find("0.200000000000", pos + 1)) {
        ++hits;
    }
    CHECK(hits == 5);
}

TEST_CASE("influence on a symmetric pair gives equal unit weights") {
    const auto r = run({"influence", "--matrix", "@symmetric2.csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1     A        1.000000") != std::string::npos);
    CHECK(r.out.find("2     B        1.000000") != std::string::npos);
}

TEST_CASE("every subcommand is deterministic") {
    const std::vector<std::vector<std::string>> commands{
        {"pagerank", "--edges", "@corpus/edges.csv", "--docs", "@corpus/docs.csv"},
        {"pagerank", "--edges", "@corpus/edges.csv", "--threads", "3"},
        {"hits", "--edges", "@corpus/edges.csv", "--top", "10"},
        {"influence", "--matrix", "@journal_matrix.csv"},
        {"influence", "--matrix", "@journal_matrix.csv", "--normalization", "unweighted",
         "--zero-diagonal"},
        {"influence", "--edges", "@corpus/edges.csv", "--docs", "@corpus/docs.csv", "--cite-year",
         "2010", "--from", "2006", "--to", "2009", "--prune"},
        {"total-cites", "--edges", "@corpus/edges.csv", "--docs", "@corpus/docs.csv",
         "--cite-year", "2010"},
        {"impact-factor", "--edges", "@corpus/edges.csv", "--docs", "@corpus/docs.csv",
         "--cite-year", "2010"},
        {"h-index", "--profile", "@laureates/negishi_profile.csv"},
        {"bradford", "--counts", "@bradford_geophysics.csv", "--zones", "3"},
        {"bradford", "--counts", "@bradford_geophysics.csv", "--boundaries", "249,748"},
        {"share-curve", "--counts", "@counts_a.csv", "--share", "0.25,0.5", "--threshold", "10"},
        {"stability", "--a", "@counts_a.csv", "--b", "@counts_b.csv", "--top", "50"},
        {"correlate", "--pairs", "@pairs.csv", "--method", "both"},
        study("sample", {"--members", "@laureates/members.csv", "--seed", "7"}),
        study("rank-buckets", {"--sample", "@laureates/rank_sample.csv", "--ranks",
                               "@laureates/rank_records.csv", "--measure", "if"}),
        study("tc-vs-if", {"--sample", "@laureates/rank_sample.csv", "--ranks",
                           "@laureates/rank_records.csv"}),
        study("authorship", {"--members", "@laureates/members.csv", "--types", "article,review"}),
    };
    for (const auto& args : commands) {
        const auto a = run(args);
        const auto b = run(args);
        INFO(args[0], " ", args[1]);
        CHECK(a.code == 0);
        CHECK(!a.out.empty());
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"pagerank", "--bogus"}).code == 1);
    CHECK(run({"pagerank", "--edges", "@cycle5.csv", "--damping", "1.5"}).code == 1);
    CHECK(run({"pagerank", "--edges", "@missing.csv"}).code == 2);
    CHECK(run({"h-index", "--profile", "@laureates/docs.csv"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    const auto slow = run({"hits", "--edges", "@corpus/edges.csv", "--max-iter", "2"});
    CHECK(slow.code == 3);
    CHECK(slow.out.find("NOT CONVERGED") != std::string::npos);
    CHECK(slow.err.find("did not converge") != std::string::npos);
}

TEST_CASE("report files are written alongside the text report") {
    const auto dir = std::filesystem::temp_directory_path() / "citerank_test_cli";
    std::filesystem::create_directories(dir);
    const auto csv = (dir / "bradford.csv").string();
    const auto json = (dir / "bradford.json").string();
    const auto r = run({"bradford", "--counts", "@bradford_geophysics.csv", "--boundaries",
                        "249,748", "--csv", csv, "--json", json});
    REQUIRE(r.code == 0);
    const auto c = test_support::slurp(csv);
    CHECK(c.starts_with("zone,journals,"));
    CHECK(c.find("nucleus,9,") != std::string::npos);
    CHECK(test_support::slurp(json).find("\"caption\"") != std::string::npos);
}

TEST_CASE("golden rank-bucket report") {
    const auto r = run(study("rank-buckets", {"--sample", "@laureates/rank_sample.csv", "--ranks",
                                              "@laureates/rank_records.csv"}));
    CHECK(r.code == 0);
    CHECK(r.out == test_support::slurp(test_support::fixture("golden/rank_buckets_tc.txt")));
}
