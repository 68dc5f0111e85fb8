#include "doctest.h"
#include "support/fixtures.hpp"

#include "svid/edge_list.hpp"
#include "svid/errors.hpp"
#include "svid/generators.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace svid;
using namespace svid::testing;

namespace {

std::string canonical(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

EdgeListReport parse(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

} // namespace

TEST_CASE("ER extremes") {
    const Graph none = erdos_renyi(4, 0, 99);
    CHECK(none.edge_count() == 0);
    CHECK(lcc_size(none) == 1);

    const Graph full = erdos_renyi(4, 6, 5);
    CHECK(full.edge_count() == 6);
    CHECK(canonical(full) == canonical(complete(4)));

    CHECK_THROWS_AS((void)erdos_renyi(4, 7, 1), DomainError);
}

TEST_CASE("ER always has exactly m simple edges") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 5 + seed * 7;
        const std::size_t m = (n * (n - 1) / 2) * (seed % 5 + 1) / 6;
        const Graph g = erdos_renyi(n, m, seed);
        CHECK(g.edge_count() == m);
        CHECK(g.well_formed());
    }
}

TEST_CASE("BA edge count follows the construction rule") {
    const std::size_t n = 5000;
    const std::size_t m0 = 2;
    const Graph g = barabasi_albert(n, m0, 7);
    CHECK(g.edge_count() == (m0 + 1) * m0 / 2 + (n - m0 - 1) * m0);
    CHECK(g.well_formed());

    CHECK_THROWS_AS((void)barabasi_albert(5, 0, 1), DomainError);
    CHECK_THROWS_AS((void)barabasi_albert(5, 5, 1), DomainError);
}

TEST_CASE("BA degree distribution is heavy-tailed") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto s = stats(barabasi_albert(5000, 2, seed));
        CHECK(static_cast<double>(s.k_max) > 10.0 * s.mean_degree);
    }
}

TEST_CASE("generation is deterministic per seed") {
    for (auto family : {GraphFamily::ErdosRenyi, GraphFamily::BarabasiAlbert}) {
        GenSpec spec{family, 500, family == GraphFamily::ErdosRenyi ? 1000u : 3u, 42};
        CHECK(canonical(generate(spec)) == canonical(generate(spec)));
        GenSpec other = spec;
        other.seed = 43;
        CHECK(canonical(generate(spec)) != canonical(generate(other)));
    }
}

TEST_CASE("parse_gen_spec") {
    const auto er = parse_gen_spec("er:5000,10000", 3);
    CHECK(er.family == GraphFamily::ErdosRenyi);
    CHECK(er.n == 5000);
    CHECK(er.m == 10000);
    CHECK(er.seed == 3);
    CHECK(parse_gen_spec("ba:100,2", 0).family == GraphFamily::BarabasiAlbert);
    CHECK_THROWS_AS((void)parse_gen_spec("ws:10,2", 0), ConfigError);
    CHECK_THROWS_AS((void)parse_gen_spec("er:10", 0), ConfigError);
    CHECK_THROWS_AS((void)parse_gen_spec("er:10,x", 0), ConfigError);
}

TEST_CASE("read_edge_list") {
    SUBCASE("path") {
        const auto r = parse("0 1\n1 2\n");
        CHECK(r.graph.node_count() == 3);
        CHECK(canonical(r.graph) == canonical(path(3)));
    }
    SUBCASE("duplicates") {
        const auto r = parse("0 1\n0 1\n1 0\n");
        CHECK(r.graph.edge_count() == 1);
        CHECK(r.duplicate_edges == 2);
    }
    SUBCASE("comment and self-loop") {
        const auto r = parse("# c\n3 3\n3 4\n");
        CHECK(r.graph.edge_count() == 1);
        CHECK(r.self_loops == 1);
        CHECK(r.graph.label(0) == 3);
        CHECK(r.graph.label(1) == 4);
    }
    SUBCASE("labels are remapped densely in ascending order") {
        const auto r = parse("100 7\n7 -2\n");
        CHECK(r.graph.node_count() == 3);
        CHECK(r.graph.labels() == std::vector<std::int64_t>{-2, 7, 100});
        CHECK(r.graph.has_edge(0, 1));
        CHECK(r.graph.has_edge(1, 2));
    }
    SUBCASE("tabs, CRLF and blank lines") {
        const auto r = parse("1\t2\r\n\n  2   3  \r\n");
        CHECK(r.graph.edge_count() == 2);
    }
}

TEST_CASE("read_edge_list errors") {
    try {
        (void)parse("0 1\n1 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS((void)parse("0 1\n5\n"), ParseError);
    CHECK_THROWS_AS((void)parse("0 1 2\n"), ParseError);
    CHECK_THROWS_AS((void)parse("# nothing\n"), DomainError);
    CHECK_THROWS_AS((void)parse("4 4\n"), DomainError);
    CHECK_THROWS_AS((void)read_edge_list("/nonexistent/file.txt"), ParseError);
}

TEST_CASE("write_edge_list") {
    CHECK(canonical(path(3)) == "0 1\n1 2\n");
    CHECK(canonical(empty(4)).empty());

    // canonical form of a messy file, and idempotence of read/write
    const std::string messy = "# header\n5 3\n3 5\n9 3\n3 3\n";
    const std::string once = canonical(parse(messy).graph);
    CHECK(once == "3 5\n3 9\n");
    CHECK(canonical(parse(once).graph) == once);
}

TEST_CASE("file round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "svid_io_test";
    std::filesystem::create_directories(dir);
    const Graph g = barabasi_albert(300, 3, 1);
    write_edge_list(g, dir / "g.txt");
    const auto back = read_edge_list(dir / "g.txt");
    CHECK(back.graph.fingerprint() == g.fingerprint());
    CHECK(back.duplicate_edges == 0);
    std::filesystem::remove_all(dir);
}
