#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ihara {

// Translation in Z^d.
struct ZVec {
  std::vector<std::int64_t> v;

  static ZVec identity(int dim);
  static ZVec unit(int dim, int axis);  // +1 along one axis
  static ZVec parse(const std::string& text, int dim);

  bool operator==(const ZVec&) const = default;
  bool is_identity() const;
  std::size_t hash_code() const;
  std::string to_string() const;  // "1,-2"

  friend ZVec compose(const ZVec& a, const ZVec& b);
  friend ZVec inverse(const ZVec& a);
};

// Reduced word in a finitely generated free group. Letters are nonzero ints:
// +k is generator k, -k its inverse; no adjacent inverse pair survives
// construction.
struct FreeWord {
  std::vector<int> letters;

  static FreeWord identity();
  static FreeWord generator(int k);  // 1-based
  static FreeWord from_letters(std::vector<int> raw);
  // "abA" with a..z generators 1..26, A..Z their inverses, "e" the identity
  static FreeWord parse(const std::string& text, int rank);

  bool operator==(const FreeWord&) const = default;
  bool is_identity() const { return letters.empty(); }
  std::size_t hash_code() const;
  std::string to_string() const;

  friend FreeWord compose(const FreeWord& a, const FreeWord& b);
  friend FreeWord inverse(const FreeWord& a);
};

// Trait point for user-supplied carriers: decidable equality plus the group
// operations and a stable textual form.
template <class G>
concept GroupCarrier = requires(const G& a, const G& b) {
  { compose(a, b) } -> std::same_as<G>;
  { inverse(a) } -> std::same_as<G>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_identity() } -> std::convertible_to<bool>;
  { a.hash_code() } -> std::same_as<std::size_t>;
  { a.to_string() } -> std::same_as<std::string>;
};

template <GroupCarrier G>
struct GroupHash {
  std::size_t operator()(const G& g) const { return g.hash_code(); }
};

}  // namespace ihara
