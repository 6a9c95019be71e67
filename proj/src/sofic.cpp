#include "ihara/sofic.hpp"

#include <numeric>

namespace ihara {

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Permutation identity_permutation(int degree) {
  Permutation p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose_permutations(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw std::invalid_argument("permutation degree mismatch");
  Permutation r(s.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    r[i] = s[static_cast<std::size_t>(t[i])];
  return r;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

double hamming_distance(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation degree mismatch");
  if (a.empty()) return 0.0;
  std::size_t moved = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++moved;
  return static_cast<double>(moved) / static_cast<double>(a.size());
}

AlmostHom<ZVec> make_quotient_hom_zd(int modulus, int dim, const GroupSet<ZVec>& domain) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  long long degree = 1;
  for (int k = 0; k < dim; ++k) {
    degree *= modulus;
    if (degree > 50'000'000) throw std::invalid_argument("quotient degree too large");
  }

  AlmostHom<ZVec> hom;
  hom.degree = static_cast<int>(degree);
  hom.provenance = HomProvenance::quotient;
  std::vector<int> coord(static_cast<std::size_t>(dim));
  for (const ZVec& gamma : domain) {
    if (static_cast<int>(gamma.v.size()) != dim)
      throw std::invalid_argument("lattice element dimension mismatch");
    Permutation p(static_cast<std::size_t>(degree));
    for (int i = 0; i < static_cast<int>(degree); ++i) {
      int rest = i;
      for (int k = 0; k < dim; ++k) {
        coord[static_cast<std::size_t>(k)] = rest % modulus;
        rest /= modulus;
      }
      int target = 0;
      int stride = 1;
      for (int k = 0; k < dim; ++k) {
        const long long shifted =
            ((coord[static_cast<std::size_t>(k)] + gamma.v[static_cast<std::size_t>(k)]) % modulus +
             modulus) %
            modulus;
        target += static_cast<int>(shifted) * stride;
        stride *= modulus;
      }
      p[static_cast<std::size_t>(i)] = target;
    }
    hom.table[gamma] = std::move(p);
  }
  return hom;
}

AlmostHom<FreeWord> make_random_almost_hom(int rank, int degree, std::uint64_t seed,
                                           const GroupSet<FreeWord>& domain) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");

  Rng rng(seed);
  std::vector<Permutation> gen(static_cast<std::size_t>(rank));
  std::vector<Permutation> gen_inv(static_cast<std::size_t>(rank));
  for (int k = 0; k < rank; ++k) {
    Permutation p = identity_permutation(degree);
    for (int i = degree - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
      std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    }
    gen_inv[static_cast<std::size_t>(k)] = inverse_permutation(p);
    gen[static_cast<std::size_t>(k)] = std::move(p);
  }

  AlmostHom<FreeWord> hom;
  hom.degree = degree;
  hom.provenance = HomProvenance::random_seeded;
  for (const FreeWord& word : domain) {
    Permutation image = identity_permutation(degree);
    for (int letter : word.letters) {
      const std::size_t k = static_cast<std::size_t>(std::abs(letter) - 1);
      if (static_cast<int>(k) >= rank)
        throw std::invalid_argument("word uses a generator beyond the declared rank: " +
                                    word.to_string());
      image = compose_permutations(image, letter > 0 ? gen[k] : gen_inv[k]);
    }
    hom.table[word] = std::move(image);
  }
  return hom;
}

}  // namespace ihara
