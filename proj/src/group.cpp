#include "ihara/group.hpp"

#include <stdexcept>

namespace ihara {

namespace {

std::size_t mix(std::size_t h, std::size_t value) {
  h ^= value + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

ZVec ZVec::identity(int dim) {
  if (dim < 1) throw std::invalid_argument("lattice dimension must be >= 1");
  return ZVec{std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0)};
}

ZVec ZVec::unit(int dim, int axis) {
  ZVec z = identity(dim);
  if (axis < 0 || axis >= dim) throw std::invalid_argument("axis out of range");
  z.v[static_cast<std::size_t>(axis)] = 1;
  return z;
}

ZVec ZVec::parse(const std::string& text, int dim) {
  ZVec z = identity(dim);
  std::size_t pos = 0;
  for (int k = 0; k < dim; ++k) {
    if (pos >= text.size()) throw std::invalid_argument("lattice element too short: " + text);
    std::size_t used = 0;
    z.v[static_cast<std::size_t>(k)] = std::stoll(text.substr(pos), &used);
    pos += used;
    if (k + 1 < dim) {
      if (pos >= text.size() || text[pos] != ',')
        throw std::invalid_argument("expected ',' in lattice element: " + text);
      ++pos;
    }
  }
  if (pos != text.size()) throw std::invalid_argument("trailing characters in lattice element: " + text);
  return z;
}

bool ZVec::is_identity() const {
  for (std::int64_t c : v)
    if (c != 0) return false;
  return true;
}

std::size_t ZVec::hash_code() const {
  std::size_t h = v.size();
  for (std::int64_t c : v) h = mix(h, static_cast<std::size_t>(c));
  return h;
}

std::string ZVec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(v[i]);
  }
  return out;
}

ZVec compose(const ZVec& a, const ZVec& b) {
  if (a.v.size() != b.v.size()) throw std::invalid_argument("lattice dimension mismatch");
  ZVec r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
  return r;
}

ZVec inverse(const ZVec& a) {
  ZVec r = a;
  for (auto& c : r.v) c = -c;
  return r;
}

FreeWord FreeWord::identity() { return FreeWord{}; }

FreeWord FreeWord::generator(int k) {
  if (k < 1) throw std::invalid_argument("generator index must be >= 1");
  return FreeWord{{k}};
}

FreeWord FreeWord::from_letters(std::vector<int> raw) {
  std::vector<int> reduced;
  reduced.reserve(raw.size());
  for (int letter : raw) {
    if (letter == 0) throw std::invalid_argument("zero letter in word");
    if (!reduced.empty() && reduced.back() == -letter)
      reduced.pop_back();
    else
      reduced.push_back(letter);
  }
  return FreeWord{std::move(reduced)};
}

FreeWord FreeWord::parse(const std::string& text, int rank) {
  if (text == "e" || text.empty()) return identity();
  std::vector<int> letters;
  letters.reserve(text.size());
  for (char c : text) {
    int letter = 0;
    if (c >= 'a' && c <= 'z') letter = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z') letter = -(c - 'A' + 1);
    else throw std::invalid_argument("bad letter in word: " + text);
    if (letter > rank || -letter > rank)
      throw std::invalid_argument("letter beyond declared rank in word: " + text);
    letters.push_back(letter);
  }
  return from_letters(std::move(letters));
}

std::size_t FreeWord::hash_code() const {
  std::size_t h = letters.size();
  for (int c : letters) h = mix(h, static_cast<std::size_t>(static_cast<std::uint32_t>(c)));
  return h;
}

std::string FreeWord::to_string() const {
  if (letters.empty()) return "e";
  std::string out;
  for (int c : letters) {
    if (c > 0 && c <= 26) out.push_back(static_cast<char>('a' + c - 1));
    else if (c < 0 && c >= -26) out.push_back(static_cast<char>('A' - c - 1));
    else return "<word beyond 26 generators>";
  }
  return out;
}

FreeWord compose(const FreeWord& a, const FreeWord& b) {
  std::vector<int> all = a.letters;
  all.insert(all.end(), b.letters.begin(), b.letters.end());
  return FreeWord::from_letters(std::move(all));
}

FreeWord inverse(const FreeWord& a) {
  std::vector<int> rev;
  rev.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) rev.push_back(-*it);
  return FreeWord{std::move(rev)};
}

}  // namespace ihara
