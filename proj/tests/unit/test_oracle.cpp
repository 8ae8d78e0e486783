#include "doctest.h"
#include "hoboss/oracle/naive_graph.hpp"

using hoboss::oracle::NaiveGraph;

TEST_CASE("oracle tiny fixture") {
    const NaiveGraph g({"TACGT"}, 3, 1);
    CHECK(g.nodes() == std::vector<std::string>{"$$$", "$TA", "TAC", "ACG", "$$T", "CGT"});
    CHECK(g.naive_vo_forward("T", 'A') == "$TA");
    CHECK(g.naive_vo_forward("TAC", 'G') == "ACG");
    CHECK(g.normalize("T") == "T");
    CHECK(g.span("T") == std::pair<std::uint64_t, std::uint64_t>{5, 6});
    CHECK(g.naive_shorter("CGT") == std::optional<std::string>("T"));
    CHECK_FALSE(g.naive_shorter("T").has_value());
    CHECK_FALSE(g.naive_shorter("").has_value());
    CHECK_THROWS(g.naive_vo_forward("TAC", 'T'));
}

TEST_CASE("oracle pruning hides shallow contexts") {
    const NaiveGraph g({"TACGT"}, 3, 2);
    CHECK_FALSE(g.is_trie_node("T"));
    CHECK_FALSE(g.naive_shorter("CGT").has_value());
    CHECK(g.trie_nodes().size() == 7);
}

TEST_CASE("oracle walker") {
    const NaiveGraph chain({"TACGTTCA"}, 3, 3);
    CHECK(chain.naive_rm_walk("TAC").text == "TACGTTCA");
    const NaiveGraph branch({"TTACGT", "TTACGA"}, 3, 3);
    CHECK(branch.naive_rm_walk("TTA").text == "TTACG");
    const NaiveGraph loop({"ACAC"}, 2, 1);
    CHECK(loop.naive_rm_walk("AC").capped);
}
