#include <sstream>

#include "doctest.h"
#include "support.hpp"

using namespace decoyplace;
using support::path_of;

namespace {

std::size_t accounted(const ParseStats& s) { return s.accepted + s.rejects.size() + s.loops_dropped; }

}  // namespace

TEST_CASE("asn parsing bounds") {
  CHECK(parse_asn("1")->value == 1);
  CHECK(parse_asn("4294967295")->value == 4294967295u);
  CHECK_FALSE(parse_asn("0"));
  CHECK_FALSE(parse_asn("4294967296"));
  CHECK_FALSE(parse_asn("-3"));
  CHECK_FALSE(parse_asn("12a"));
  CHECK_FALSE(parse_asn(""));
}

TEST_CASE("prefix parsing clears host bits") {
  auto p = parse_prefix("10.1.2.3/16");
  REQUIRE(p);
  CHECK(p->str() == "10.1.0.0/16");
  CHECK(parse_prefix("0.0.0.0/0")->str() == "0.0.0.0/0");
  CHECK_FALSE(parse_prefix("10.0.0.0/33"));
  CHECK_FALSE(parse_prefix("10.0.0/8"));
  CHECK_FALSE(parse_prefix("256.0.0.0/8"));
  CHECK(p->contains(*parse_ipv4("10.1.200.9")));
  CHECK_FALSE(p->contains(*parse_ipv4("10.2.0.1")));
}

TEST_CASE("rib prepending collapses") {
  std::istringstream in("10.0.0.0/24|7 7 7 3 1\n");
  auto r = parse_rib(in);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].as_path == path_of({7, 3, 1}));
  CHECK(r.entries[0].prefix.str() == "10.0.0.0/24");
}

TEST_CASE("rib loop after collapse is dropped") {
  std::istringstream in("10.0.0.0/24|7 3 7 1\n");
  auto r = parse_rib(in);
  CHECK(r.entries.empty());
  CHECK(r.stats.loops_dropped == 1);
}

TEST_CASE("rib rejects and accounting identity") {
  std::istringstream in(
      "# header\n"
      "\n"
      "10.0.0.0/24|7 3 1|rv01\n"
      "10.0.0.0/99|7 3 1\n"
      "10.0.0.0/24|7 x 1\n"
      "10.0.0.0/24|7 3 7 1\n"
      "10.0.0.0/24|23456 1\n"
      "10.0.0.0/24|\n"
      "garbage\n");
  auto r = parse_rib(in, "default");
  CHECK(r.stats.considered == 7);
  CHECK(r.stats.accepted == 2);
  CHECK(r.stats.loops_dropped == 1);
  CHECK(r.stats.rejects.size() == 4);
  CHECK(r.stats.as_trans == 1);
  CHECK(accounted(r.stats) == r.stats.considered);
  CHECK(r.stats.rejects[0].line == 4);
  CHECK(r.entries[0].source_vantage == "rv01");
  CHECK(r.entries[1].source_vantage == "default");
}

TEST_CASE("empty rib is not an error") {
  std::istringstream in("");
  auto r = parse_rib(in);
  CHECK(r.entries.empty());
  CHECK(r.stats.considered == 0);
}

TEST_CASE("prepend collapse keeps the distinct AS set") {
  SeededRng rng(5);
  for (int i = 0; i < 200; ++i) {
    AsPath p;
    auto n = rng.between(1, 12);
    for (std::uint64_t k = 0; k < n; ++k) p.push_back(Asn{static_cast<std::uint32_t>(rng.between(1, 6))});
    std::set<Asn> before(p.begin(), p.end());
    auto q = p;
    collapse_prepending(q);
    CHECK(std::set<Asn>(q.begin(), q.end()) == before);
  }
}

TEST_CASE("rib round trip with vantage labels") {
  std::istringstream in(
      "10.0.0.0/24|7 3 1|rv01\n"
      "10.0.0.0/24|9 9 3 1|rv02\n"
      "192.0.2.0/24|4 2|rv15\n"
      "198.51.100.0/22|8\n");
  auto first = parse_rib(in);
  std::ostringstream out;
  write_rib(out, first.entries);
  std::istringstream again(out.str());
  auto second = parse_rib(again);
  CHECK(second.entries == first.entries);
  std::ostringstream out2;
  write_rib(out2, second.entries);
  CHECK(out2.str() == out.str());
  CHECK(first.entries[1].source_vantage == "rv02");
}

TEST_CASE("relationship codes") {
  std::istringstream in("3356|9002|-1\n1|2|0\n1|2|0\n1|3|5\n");
  auto r = parse_relationships(in);
  REQUIRE(r.edges.size() == 2);
  CHECK(r.edges[0].first.value == 3356);
  CHECK(r.edges[0].second.value == 9002);
  CHECK(r.edges[0].kind == EdgeKind::ProviderToCustomer);
  CHECK(r.edges[1].kind == EdgeKind::PeerToPeer);
  CHECK(r.stats.duplicates == 1);
  CHECK(r.stats.rejects.size() == 1);
  CHECK(r.stats.rejects[0].line == 4);
  CHECK(accounted(r.stats) == r.stats.considered);
}

TEST_CASE("reversed peer line is a duplicate, not a conflict") {
  std::istringstream in("1|2|0\n2|1|0\n");
  auto r = parse_relationships(in);
  CHECK(r.edges.size() == 1);
  CHECK(r.stats.duplicates == 1);
}

TEST_CASE("conflicting relationship names both lines") {
  std::istringstream in("1|2|-1\n# note\n2|1|-1\n");
  try {
    parse_relationships(in);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    std::string msg = e.what();
    CHECK(msg.find("lines 1 and 3") != std::string::npos);
  }
  std::istringstream peer_vs_transit("5|6|0\n5|6|-1\n");
  CHECK_THROWS_AS(parse_relationships(peer_vs_transit), InputError);
}

TEST_CASE("relationship round trip") {
  std::istringstream in("1|2|-1\n2|3|0\n4|1|-1|serial-2\n");
  auto a = parse_relationships(in);
  std::ostringstream out;
  write_relationships(out, a.edges);
  std::istringstream again(out.str());
  auto b = parse_relationships(again);
  CHECK(a.edges == b.edges);
}

TEST_CASE("trace gaps preserved") {
  std::istringstream in("pl01|10.1.1.1|192.0.2.1,*,192.0.2.9\n");
  auto r = parse_traces(in);
  REQUIRE(r.traces.size() == 1);
  const auto& t = r.traces[0];
  CHECK(t.source_label == "pl01");
  REQUIRE(t.hops.size() == 3);
  CHECK(t.hops[0]->str() == "192.0.2.1");
  CHECK_FALSE(t.hops[1]);
  CHECK(t.hops[2]->str() == "192.0.2.9");
}

TEST_CASE("trace rejects and count conservation") {
  std::istringstream in(
      "a|10.0.0.1|1.1.1.1\n"
      "b|10.0.0.1|1.1.1.1,2.2.2.300\n"
      "c|10.0.0.1|\n"
      "d|10.0.0.x|1.1.1.1\n"
      "e|10.0.0.2|*,*\n");
  auto r = parse_traces(in);
  CHECK(r.traces.size() == 2);
  CHECK(r.stats.accepted == 2);
  CHECK(r.stats.rejects.size() == 3);
  CHECK(accounted(r.stats) == r.stats.considered);
}

TEST_CASE("trace round trip") {
  std::istringstream in("pl01|10.1.1.1|192.0.2.1,*,192.0.2.9\npl02|10.1.1.2|*\n");
  auto a = parse_traces(in);
  std::ostringstream out;
  write_traces(out, a.traces);
  std::istringstream again(out.str());
  CHECK(parse_traces(again).traces == a.traces);
}

TEST_CASE("alias canonical member") {
  std::istringstream in("192.0.2.7 192.0.2.1\n");
  auto m = parse_alias_map(in);
  CHECK(m.resolve(*parse_ipv4("192.0.2.1")).value == "192.0.2.1");
  CHECK(m.resolve(*parse_ipv4("192.0.2.7")).value == "192.0.2.1");
  CHECK(m.resolve(*parse_ipv4("198.51.100.3")).value == "198.51.100.3");
}

TEST_CASE("alias canonical member is the string minimum") {
  // 10.0.0.10 < 10.0.0.9 as strings
  std::istringstream in("10.0.0.9 10.0.0.10\n");
  auto m = parse_alias_map(in);
  CHECK(m.resolve(*parse_ipv4("10.0.0.9")).value == "10.0.0.10");
}

TEST_CASE("overlapping alias lines name the address") {
  std::istringstream in("192.0.2.1 192.0.2.7\n192.0.2.9 192.0.2.7\n");
  try {
    parse_alias_map(in);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("192.0.2.7") != std::string::npos);
  }
}

TEST_CASE("alias round trip") {
  std::istringstream in("192.0.2.7 192.0.2.1\n10.0.0.1\n10.0.0.3 10.0.0.2 10.0.0.4\n");
  auto a = parse_alias_map(in);
  std::ostringstream out;
  write_alias_map(out, a);
  std::istringstream again(out.str());
  auto b = parse_alias_map(again);
  CHECK(b.routers() == a.routers());
  std::ostringstream out2;
  write_alias_map(out2, b);
  CHECK(out2.str() == out.str());
}

TEST_CASE("countries and censors") {
  CountryMap m;
  std::istringstream c("1|CN\n2|us\n3|DE\nx|FR\n");
  auto s = parse_countries(c, m);
  CHECK(s.accepted == 2);
  CHECK(s.rejects.size() == 2);
  std::istringstream z("CN\nIR\nchina\n");
  auto cs = parse_censors(z, m);
  CHECK(cs.accepted == 2);
  CHECK(m.is_censor(Asn{1}));
  CHECK_FALSE(m.is_censor(Asn{3}));
  CHECK_FALSE(m.is_censor(Asn{99}));
  CHECK(m.country_label(Asn{99}) == "??");
  CHECK(m.has_code("DE"));
  CHECK_FALSE(m.has_code("IR"));
}

TEST_CASE("prefix list with labels") {
  std::istringstream in("203.0.113.0/24|example.org\n198.51.100.0/24\nnot-a-prefix\n");
  auto r = parse_prefix_list(in);
  REQUIRE(r.targets.size() == 2);
  CHECK(r.targets[0].label == "example.org");
  CHECK(r.targets[1].label.empty());
  CHECK(r.stats.rejects.size() == 1);
}
