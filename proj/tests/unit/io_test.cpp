#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "crosscomp/errors.hpp"
#include "crosscomp/harness.hpp"
#include "crosscomp/io.hpp"

using namespace crosscomp;
namespace fs = std::filesystem;

namespace {

ParseError parse_failure(std::string_view text) {
    try {
        parse_graph_file(text);
    } catch (const ParseError& e) {
        return e;
    }
    throw std::runtime_error("parse unexpectedly succeeded");
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("crosscomp_io_" + std::to_string(std::random_device{}()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }
    void put(const std::string& name, std::string_view text) const { write_file(path_ / name, text); }

private:
    fs::path path_;
};

}  // namespace

TEST(GraphFile, CliqueExample) {
    auto inst = parse_graph_file("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\nprob clique\nl 3\n");
    auto* b = std::get_if<BudgetedInstance>(&inst);
    ASSERT_TRUE(b);
    EXPECT_EQ(b->problem, Problem::Clique);
    EXPECT_EQ(b->graph.edge_count(), 3u);
    EXPECT_EQ(b->ell, 3);
    EXPECT_EQ(write_graph_file(inst), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\nl 3\nprob clique\n");
}

TEST(GraphFile, BareDefault) {
    auto inst = parse_graph_file("c hello\n\np edge 2 1\ne 2 1\n");
    EXPECT_EQ(problem_of(inst), Problem::Bare);
    EXPECT_EQ(write_graph_file(inst), "p edge 2 1\ne 1 2\n");
}

TEST(GraphFile, ErrorKindsAndLines) {
    auto e = parse_failure("p edge 3 2\ne 1 2\ne 2 3\ne 1 3\n");
    EXPECT_EQ(e.kind(), ParseErrorKind::CountMismatch);
    EXPECT_EQ(e.line(), 1u);

    e = parse_failure("p edge 3 1\ne 1 x\n");
    EXPECT_EQ(e.kind(), ParseErrorKind::Syntax);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);

    e = parse_failure("p edge 3 0\nprob knapsack\n");
    EXPECT_EQ(e.kind(), ParseErrorKind::UnknownTag);
    EXPECT_EQ(e.line(), 2u);

    e = parse_failure("p edge 3 0\nq 1\n");
    EXPECT_EQ(e.kind(), ParseErrorKind::Syntax);

    e = parse_failure("e 1 2\np edge 2 1\n");
    EXPECT_EQ(e.kind(), ParseErrorKind::Syntax);
    EXPECT_EQ(e.line(), 1u);

    e = parse_failure("p edge 2 1\ne 1 3\n");
    EXPECT_EQ(e.kind(), ParseErrorKind::InvariantViolation);

    e = parse_failure("p edge 2 2\ne 1 2\ne 2 1\n");
    EXPECT_EQ(e.kind(), ParseErrorKind::InvariantViolation);
    EXPECT_EQ(e.line(), 3u);

    e = parse_failure("p edge 2 0\nl 1\nl 2\nprob clique\n");
    EXPECT_EQ(e.kind(), ParseErrorKind::Syntax);
    EXPECT_EQ(e.line(), 3u);

    e = parse_failure("p edge 3 0\nw 1 1\nw 2 1\nprob wfvs-vc\nl 0\nz\n");
    EXPECT_EQ(e.kind(), ParseErrorKind::CountMismatch);

    e = parse_failure("p edge 2 0\nprob clique\n");
    EXPECT_EQ(e.kind(), ParseErrorKind::InvariantViolation);
    EXPECT_EQ(e.line(), 2u);
}

TEST(GraphFile, TsdTriangleViolation) {
    // py lists a path instead of a triangle.
    auto e = parse_failure("p edge 4 2\ne 2 3\ne 3 4\npx 1\npy 2 3 4\nprob 3col-tsd\n");
    EXPECT_EQ(e.kind(), ParseErrorKind::InvariantViolation);
    EXPECT_EQ(e.line(), 5u);
    EXPECT_NE(std::string(e.what()).find("triangle"), std::string::npos);
}

TEST(GraphFile, ParamInvariants) {
    // z = {1} leaves the edge 2-3 in a clique-vc instance.
    auto e = parse_failure("p edge 3 2\ne 1 2\ne 2 3\nz 1\nl 1\nprob clique-vc\n");
    EXPECT_EQ(e.kind(), ParseErrorKind::InvariantViolation);
    EXPECT_EQ(e.line(), 4u);
}

TEST(GraphFile, RoundTripOnComposedInstances) {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 40; ++i) {
        auto batch = i % 2 ? random_tsd_batch(rng) : random_is_batch(rng);
        auto out = compose(i % 2 ? Construction::ChromVc : Construction::FvsDc, batch);
        AnyInstance inst = out.instance;
        const std::string bytes = write_graph_file(inst);
        EXPECT_EQ(parse_graph_file(bytes), inst);
        EXPECT_EQ(write_graph_file(parse_graph_file(bytes)), bytes);
        for (const auto& member : batch)
            EXPECT_EQ(parse_graph_file(write_graph_file(member)), member);
    }
}

TEST(Cnf, ParseAndCanonicalWrite) {
    auto f = parse_cnf("c x\np cnf 3 2\n3 -1\n1 0 -2\n2 0\n%\n0\n");
    EXPECT_EQ(f.variable_count, 3);
    EXPECT_EQ(f.clauses, (std::vector<Clause>{{3, -1, 1}, {-2, 2}}));
    EXPECT_EQ(write_cnf(f), "p cnf 3 2\n1 -1 3 0\n2 -2 0\n");
    EXPECT_EQ(parse_cnf(write_cnf(f)), canonical_formula(f));
}

TEST(Cnf, Errors) {
    auto kind = [](std::string_view text) {
        try {
            parse_cnf(text);
        } catch (const ParseError& e) {
            return e.kind();
        }
        throw std::runtime_error("parse unexpectedly succeeded");
    };
    EXPECT_EQ(kind("p cnf 2 2\n1 0\n"), ParseErrorKind::CountMismatch);
    EXPECT_EQ(kind("p cnf 2 1\n1 2\n"), ParseErrorKind::Syntax);
    EXPECT_EQ(kind("p cnf 2 1\n3 0\n"), ParseErrorKind::InvariantViolation);
    EXPECT_EQ(kind("p edge 2 1\n"), ParseErrorKind::Syntax);
}

TEST(Manifest, TwoMembers) {
    TempDir dir;
    dir.put("a.graph", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\nl 2\nprob clique\n");
    dir.put("b c.graph", "p edge 3 1\ne 1 2\nl 2\nprob clique\n");
    dir.put("m.txt", "problem clique\ninstance a.graph\ninstance b c.graph\n");
    auto m = load_manifest(dir.path() / "m.txt");
    EXPECT_EQ(m.problem, Problem::Clique);
    ASSERT_EQ(m.instances.size(), 2u);
    EXPECT_EQ(graph_of(m.instances[0]).edge_count(), 3u);
    EXPECT_EQ(graph_of(m.instances[1]).edge_count(), 1u);
}

TEST(Manifest, Errors) {
    TempDir dir;
    dir.put("a.graph", "p edge 1 0\nl 1\nprob clique\n");
    dir.put("f.graph", "p edge 1 0\nl 1\nprob fvs\n");
    dir.put("bad.graph", "p edge 1 2\n");
    EXPECT_THROW(parse_manifest("", dir.path()), ParseError);
    EXPECT_THROW(parse_manifest("problem clique\n", dir.path()), ParseError);
    try {
        parse_manifest("problem clique\ninstance a.graph\ninstance f.graph\n", dir.path());
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("f.graph"), std::string::npos);
    }
    try {
        parse_manifest("problem clique\ninstance missing.graph\ninstance bad.graph\n", dir.path());
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.kind(), ParseErrorKind::Unresolvable);
        EXPECT_NE(std::string(e.what()).find("missing.graph"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("bad.graph"), std::string::npos);
    }
}

TEST(Report, ContainsParameters) {
    std::mt19937_64 rng(62);
    auto batch = random_clique_batch(rng);
    auto out = compose(Construction::CliqueVc, batch);
    const std::string r = write_report(Construction::CliqueVc, out);
    EXPECT_NE(r.find("k_prime " + std::to_string(out.instance.param_k) + "\n"), std::string::npos);
    EXPECT_NE(r.find("ell_prime " + std::to_string(out.instance.ell) + "\n"), std::string::npos);
    EXPECT_NE(r.find("range C "), std::string::npos);
}
