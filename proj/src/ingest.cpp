#include "decoyplace/ingest.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace decoyplace {

namespace detail {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace detail

using detail::split;
using detail::trim;

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    auto j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

void reject(ParseStats& stats, std::size_t line, std::string reason) {
  stats.rejects.push_back({line, std::move(reason)});
}

}  // namespace

bool collapse_prepending(AsPath& path) {
  path.erase(std::unique(path.begin(), path.end()), path.end());
  std::unordered_set<Asn> seen;
  for (auto a : path) {
    if (!seen.insert(a).second) return false;
  }
  return true;
}

RibParse parse_rib(std::istream& in, const std::string& default_vantage) {
  RibParse out;
  detail::for_each_data_line(in, out.stats, [&](std::size_t line_no, std::string_view line) {
    auto fields = split(line, '|');
    if (fields.size() < 2 || fields.size() > 3) {
      reject(out.stats, line_no, "expected PREFIX|PATH[|VANTAGE]");
      return;
    }
    auto prefix = parse_prefix(trim(fields[0]));
    if (!prefix) {
      reject(out.stats, line_no, "malformed prefix");
      return;
    }
    RibEntry entry{*prefix, {}, fields.size() == 3 ? std::string(trim(fields[2])) : default_vantage};
    bool trans = false;
    for (auto tok : split_ws(fields[1])) {
      auto asn = parse_asn(tok);
      if (!asn) {
        reject(out.stats, line_no, "non-numeric ASN '" + std::string(tok) + "'");
        return;
      }
      trans = trans || asn->value == kAsTrans;
      entry.as_path.push_back(*asn);
    }
    if (entry.as_path.empty()) {
      reject(out.stats, line_no, "empty AS path");
      return;
    }
    if (!collapse_prepending(entry.as_path)) {
      ++out.stats.loops_dropped;
      return;
    }
    if (trans) ++out.stats.as_trans;
    ++out.stats.accepted;
    out.entries.push_back(std::move(entry));
  });
  return out;
}

void write_rib(std::ostream& out, std::span<const RibEntry> entries) {
  for (const auto& e : entries) {
    out << e.prefix.str() << '|' << join_path(e.as_path);
    if (!e.source_vantage.empty()) out << '|' << e.source_vantage;
    out << '\n';
  }
}

RelationshipParse parse_relationships(std::istream& in) {
  RelationshipParse out;
  // keyed by the unordered pair
  std::map<std::pair<Asn, Asn>, RawEdge> by_pair;
  detail::for_each_data_line(in, out.stats, [&](std::size_t line_no, std::string_view line) {
    auto fields = split(line, '|');
    if (fields.size() < 3 || fields.size() > 4) {
      reject(out.stats, line_no, "expected ASN|ASN|CODE");
      return;
    }
    auto a = parse_asn(trim(fields[0]));
    auto b = parse_asn(trim(fields[1]));
    if (!a || !b) {
      reject(out.stats, line_no, "non-numeric ASN");
      return;
    }
    auto code = trim(fields[2]);
    RawEdge edge{*a, *b, EdgeKind::PeerToPeer, line_no};
    if (code == "-1") {
      edge.kind = EdgeKind::ProviderToCustomer;
    } else if (code != "0") {
      reject(out.stats, line_no, "unknown relationship code '" + std::string(code) + "'");
      return;
    }
    auto key = std::minmax(*a, *b);
    auto [it, inserted] = by_pair.try_emplace({key.first, key.second}, edge);
    if (!inserted) {
      const auto& prev = it->second;
      bool same = prev.kind == edge.kind &&
                  (edge.kind == EdgeKind::PeerToPeer || (prev.first == edge.first && prev.second == edge.second));
      if (!same) {
        throw InputError("conflicting relationship for AS" + a->str() + "/AS" + b->str() + " on lines " +
                         std::to_string(prev.line) + " and " + std::to_string(line_no));
      }
      ++out.stats.duplicates;
      ++out.stats.accepted;
      return;
    }
    ++out.stats.accepted;
    out.edges.push_back(edge);
  });
  return out;
}

void write_relationships(std::ostream& out, std::span<const RawEdge> edges) {
  for (const auto& e : edges) {
    out << e.first.str() << '|' << e.second.str() << '|' << (e.kind == EdgeKind::ProviderToCustomer ? "-1" : "0")
        << '\n';
  }
}

TraceParse parse_traces(std::istream& in) {
  TraceParse out;
  detail::for_each_data_line(in, out.stats, [&](std::size_t line_no, std::string_view line) {
    auto fields = split(line, '|');
    if (fields.size() != 3) {
      reject(out.stats, line_no, "expected SRC|DST|HOPS");
      return;
    }
    auto dst = parse_ipv4(trim(fields[1]));
    if (!dst) {
      reject(out.stats, line_no, "malformed destination IP");
      return;
    }
    RouterTrace trace{std::string(trim(fields[0])), *dst, {}};
    auto hops_text = trim(fields[2]);
    if (hops_text.empty()) {
      reject(out.stats, line_no, "empty hop list");
      return;
    }
    for (auto tok : split(hops_text, ',')) {
      tok = trim(tok);
      if (tok == "*") {
        trace.hops.emplace_back(std::nullopt);
        continue;
      }
      auto ip = parse_ipv4(tok);
      if (!ip) {
        reject(out.stats, line_no, "malformed hop IP '" + std::string(tok) + "'");
        return;
      }
      trace.hops.emplace_back(*ip);
    }
    ++out.stats.accepted;
    out.traces.push_back(std::move(trace));
  });
  return out;
}

void write_traces(std::ostream& out, std::span<const RouterTrace> traces) {
  for (const auto& t : traces) {
    out << t.source_label << '|' << t.destination.str() << '|';
    for (std::size_t i = 0; i < t.hops.size(); ++i) {
      if (i) out << ',';
      out << (t.hops[i] ? t.hops[i]->str() : "*");
    }
    out << '\n';
  }
}

void AliasMap::add_router(std::vector<Ipv4> members) {
  std::sort(members.begin(), members.end(), [](Ipv4 a, Ipv4 b) { return a.str() < b.str(); });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) return;
  for (auto ip : members) {
    if (index_.contains(ip)) throw InputError("address " + ip.str() + " appears in two alias sets");
  }
  auto id = routers_.size();
  for (auto ip : members) index_.emplace(ip, id);
  ids_.push_back(RouterId{members.front().str()});
  routers_.push_back(std::move(members));
}

RouterId AliasMap::resolve(Ipv4 ip) const {
  auto it = index_.find(ip);
  if (it == index_.end()) return RouterId{ip.str()};
  return ids_[it->second];
}

AliasMap parse_alias_map(std::istream& in) {
  AliasMap map;
  ParseStats stats;
  detail::for_each_data_line(in, stats, [&](std::size_t line_no, std::string_view line) {
    std::vector<Ipv4> members;
    for (auto tok : split_ws(line)) {
      auto ip = parse_ipv4(tok);
      if (!ip) throw InputError("line " + std::to_string(line_no) + ": malformed alias IP '" + std::string(tok) + "'");
      members.push_back(*ip);
    }
    try {
      map.add_router(std::move(members));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  });
  return map;
}

void write_alias_map(std::ostream& out, const AliasMap& aliases) {
  for (const auto& members : aliases.routers()) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) out << ' ';
      out << members[i].str();
    }
    out << '\n';
  }
}

bool is_country_code(std::string_view code) {
  return code.size() == 2 && code[0] >= 'A' && code[0] <= 'Z' && code[1] >= 'A' && code[1] <= 'Z';
}

std::optional<std::string> CountryMap::country_of(Asn asn) const {
  auto it = mapping_.find(asn);
  if (it == mapping_.end()) return std::nullopt;
  return it->second;
}

bool CountryMap::is_censor(Asn asn) const {
  auto cc = country_of(asn);
  return cc && censors_.contains(*cc);
}

bool CountryMap::has_code(const std::string& code) const {
  return std::any_of(mapping_.begin(), mapping_.end(), [&](const auto& kv) { return kv.second == code; });
}

ParseStats parse_countries(std::istream& in, CountryMap& map) {
  ParseStats stats;
  detail::for_each_data_line(in, stats, [&](std::size_t line_no, std::string_view line) {
    auto fields = split(line, '|');
    if (fields.size() != 2) {
      reject(stats, line_no, "expected ASN|CC");
      return;
    }
    auto asn = parse_asn(trim(fields[0]));
    auto cc = trim(fields[1]);
    if (!asn || !is_country_code(cc)) {
      reject(stats, line_no, "malformed ASN or country code");
      return;
    }
    map.assign(*asn, std::string(cc));
    ++stats.accepted;
  });
  return stats;
}

ParseStats parse_censors(std::istream& in, CountryMap& map) {
  ParseStats stats;
  detail::for_each_data_line(in, stats, [&](std::size_t line_no, std::string_view line) {
    if (!is_country_code(line)) {
      reject(stats, line_no, "censor code must be two uppercase letters");
      return;
    }
    map.add_censor(std::string(line));
    ++stats.accepted;
  });
  return stats;
}

PrefixListParse parse_prefix_list(std::istream& in) {
  PrefixListParse out;
  detail::for_each_data_line(in, out.stats, [&](std::size_t line_no, std::string_view line) {
    auto fields = split(line, '|');
    if (fields.size() > 2) {
      reject(out.stats, line_no, "expected PREFIX[|label]");
      return;
    }
    auto prefix = parse_prefix(trim(fields[0]));
    if (!prefix) {
      reject(out.stats, line_no, "malformed prefix");
      return;
    }
    out.targets.push_back({*prefix, fields.size() == 2 ? std::string(trim(fields[1])) : std::string{}});
    ++out.stats.accepted;
  });
  return out;
}

}  // namespace decoyplace
