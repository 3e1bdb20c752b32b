#include "decoyplace/types.hpp"

#include <charconv>

namespace decoyplace {

namespace {

template <typename T>
std::optional<T> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Asn> parse_asn(std::string_view text) {
  auto v = parse_decimal<std::uint64_t>(text);
  if (!v || *v == 0 || *v > 0xFFFFFFFFull) return std::nullopt;
  return Asn{static_cast<std::uint32_t>(*v)};
}

std::optional<std::uint64_t> parse_count(std::string_view text) { return parse_decimal<std::uint64_t>(text); }

std::string Ipv4::str() const {
  return std::to_string(value >> 24) + '.' + std::to_string((value >> 16) & 0xFF) + '.' +
         std::to_string((value >> 8) & 0xFF) + '.' + std::to_string(value & 0xFF);
}

std::optional<Ipv4> parse_ipv4(std::string_view text) {
  std::uint32_t out = 0;
  int parts = 0;
  while (parts < 4) {
    auto dot = text.find('.');
    auto field = text.substr(0, dot);
    if (field.size() > 3) return std::nullopt;
    auto octet = parse_decimal<std::uint32_t>(field);
    if (!octet || *octet > 255) return std::nullopt;
    out = (out << 8) | *octet;
    ++parts;
    if (dot == std::string_view::npos) break;
    text.remove_prefix(dot + 1);
  }
  if (parts != 4 || text.find('.') != std::string_view::npos) return std::nullopt;
  return Ipv4{out};
}

std::uint32_t prefix_mask(std::uint8_t length) {
  return length == 0 ? 0u : ~std::uint32_t{0} << (32 - length);
}

bool Prefix::contains(Ipv4 ip) const { return (ip.value & prefix_mask(length)) == network.value; }

std::string Prefix::str() const { return network.str() + '/' + std::to_string(length); }

std::optional<Prefix> parse_prefix(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  auto ip = parse_ipv4(text.substr(0, slash));
  auto len_text = text.substr(slash + 1);
  if (len_text.size() > 2) return std::nullopt;
  auto len = parse_decimal<std::uint32_t>(len_text);
  if (!ip || !len || *len > 32) return std::nullopt;
  auto length = static_cast<std::uint8_t>(*len);
  return Prefix{Ipv4{ip->value & prefix_mask(length)}, length};
}

std::string join_path(const AsPath& path, char sep) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += sep;
    out += path[i].str();
  }
  return out;
}

}  // namespace decoyplace
