#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace decoyplace {

/// Hard input error: the data set is inconsistent and processing cannot
/// continue (conflicting relationships, overlapping alias sets, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by a caller (empty candidate list, bad threshold).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint32_t kAsTrans = 23456;

struct Asn {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const Asn&) const = default;
  std::string str() const { return std::to_string(value); }
};

using AsPath = std::vector<Asn>;

// Strict: decimal digits only, 1..2^32-1.
std::optional<Asn> parse_asn(std::string_view text);

/// Non-negative decimal integer.
std::optional<std::uint64_t> parse_count(std::string_view text);

struct Ipv4 {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const Ipv4&) const = default;
  std::string str() const;
};

std::optional<Ipv4> parse_ipv4(std::string_view text);

struct Prefix {
  Ipv4 network;
  std::uint8_t length = 0;

  constexpr auto operator<=>(const Prefix&) const = default;

  bool contains(Ipv4 ip) const;
  std::string str() const;
};

/// Parses `a.b.c.d/len`; host bits below `len` are cleared.
std::optional<Prefix> parse_prefix(std::string_view text);

std::uint32_t prefix_mask(std::uint8_t length);

/// Opaque router identity; the canonical member IP of an alias set.
struct RouterId {
  std::string value;

  auto operator<=>(const RouterId&) const = default;
};

std::string join_path(const AsPath& path, char sep = ' ');

}  // namespace decoyplace

template <>
struct std::hash<decoyplace::Asn> {
  std::size_t operator()(decoyplace::Asn a) const noexcept { return std::hash<std::uint32_t>{}(a.value); }
};

template <>
struct std::hash<decoyplace::Ipv4> {
  std::size_t operator()(decoyplace::Ipv4 a) const noexcept { return std::hash<std::uint32_t>{}(a.value); }
};
