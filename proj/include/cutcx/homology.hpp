#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cutcx/bigint.hpp"
#include "cutcx/closed_forms.hpp"
#include "cutcx/cut_complex.hpp"

namespace cutcx {

// Largest prime modulus accepted by the GF(p) routines (exclusive).
inline constexpr std::uint32_t kPrimeLimit = 1U << 16;

// Throws InvalidArgument unless p is a prime below kPrimeLimit.
void require_prime(std::uint32_t p);

// Residue modulo a prime p < 2^16.
class FieldElement {
 public:
  FieldElement(std::int64_t value, std::uint32_t prime);

  std::uint32_t value() const { return value_; }
  std::uint32_t prime() const { return prime_; }

  // Throws InvalidArgument for zero.
  FieldElement inverse() const;

  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b);
  friend FieldElement operator*(FieldElement a, FieldElement b);
  friend FieldElement operator/(FieldElement a, FieldElement b);
  friend bool operator==(FieldElement a, FieldElement b) = default;

 private:
  std::uint32_t value_;
  std::uint32_t prime_;
};

struct BoundaryEntry {
  std::uint32_t row;
  std::int8_t sign;  // +1 or -1
};

// Boundary map from faces of dimension `dim` (cardinality dim+1) to faces of
// dimension dim-1. The empty face is the single row of dim = 0. Column c
// lists the faces obtained by deleting the i-th smallest vertex, with sign
// (-1)^i.
struct BoundaryMatrix {
  int dim = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<BoundaryEntry>> columns;
};

// Augmented chain complex: one boundary matrix per dimension 0..d. Requires a
// downward-closed face family with at most 10^5 faces per dimension; a
// missing subface is reported as InvalidArgument naming the witness. The void
// complex yields no matrices.
std::vector<BoundaryMatrix> build_chain_complex(const FaceLists& faces);

// Rank over GF(prime). GF(2) uses bit-packed rows, other primes dense
// residue rows.
std::size_t rank_mod_p(const BoundaryMatrix& m, std::uint32_t prime);

// True iff lower * upper vanishes over GF(prime); lower.dim must be upper.dim-1.
bool composition_vanishes(const BoundaryMatrix& lower, const BoundaryMatrix& upper,
                          std::uint32_t prime);

struct BettiNumbers {
  std::uint32_t prime = 2;
  std::uint64_t degree_minus_one = 0;   // reduced beta_{-1}
  std::vector<std::uint64_t> values;    // reduced beta_i, i = 0..d
  std::vector<std::size_t> ranks;       // rank of the boundary in dimension i = 0..d

  // sum_i (-1)^i beta_i, including i = -1.
  std::int64_t euler_characteristic() const;
};

// Reduced Betti numbers beta_i = nullity(d_i) - rank(d_{i+1}). Throws
// InternalError when some d_{i-1} d_i does not vanish. Empty for the void
// complex.
BettiNumbers betti_numbers(std::span<const BoundaryMatrix> complex, std::uint32_t prime);

struct ConcentrationReport {
  int k = 0;
  int n = 0;
  BigInt expected;                   // beta_closed(k, n)
  std::vector<BettiNumbers> per_prime;
  std::vector<std::string> failures;  // empty iff the check holds
  bool holds() const { return failures.empty(); }
};

// Limitation that applies to every concentration report.
inline constexpr const char* kFieldSamplingNote =
    "homology compared over sampled prime fields only; homotopy type not verified";

// Computes the complex from its facets and checks, for every prime, that the
// reduced homology is zero outside degree n-k-1 and equals beta_closed there.
// Requires k >= 2, k+3 <= n <= 14.
ConcentrationReport verify_concentration(int k, int n, std::span<const std::uint32_t> primes);

// Betti table from the oracle at one prime; n = k + r must stay <= 14.
BettiTable homology_table(int r_min, int r_max, int k_min, int k_max, std::uint32_t prime);

// "dim row col value" lines, one per nonzero entry, with value +1 / -1.
std::string format_boundary_triplets(std::span<const BoundaryMatrix> complex);

}  // namespace cutcx
