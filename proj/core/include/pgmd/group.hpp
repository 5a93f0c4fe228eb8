#ifndef PGMD_GROUP_HPP
#define PGMD_GROUP_HPP

#include <string>
#include <utility>
#include <vector>

namespace pgmd {

// Finite group stored as an explicit multiplication table over element
// indices 0..order-1. Construction validates the group axioms (identity,
// associativity, inverses) eagerly; every instance handed out is a group.
// Immutable after construction and safe to share across threads.
class FiniteGroup {
 public:
  // Largest order accepted for an explicit table (axiom validation is
  // cubic in the order).
  static constexpr int kMaxOrder = 512;

  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::string label,
                                std::vector<std::string> element_labels = {});

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return table_[x][y]; }
  int inverse(int x) const { return inverse_[x]; }

  const std::string& label() const { return label_; }
  const std::vector<std::string>& element_labels() const {
    return element_labels_;
  }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  FiniteGroup() = default;

  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::string label_;
  std::vector<std::string> element_labels_;
};

// Z_n with mul(i, j) = (i + j) mod n and identity 0. Rejects n < 1.
FiniteGroup make_cyclic(int n);

// Dihedral group of order 2n: indices 0..n-1 are the rotations a^i, indices
// n..2n-1 are the reflections a^i b. Rejects n < 1; n = 1 and n = 2 are
// accepted but labeled degenerate.
FiniteGroup make_dihedral(int n);

// Componentwise product; element index is the mixed-radix encoding of the
// component indices, most significant factor first.
FiniteGroup make_direct_product(const std::vector<FiniteGroup>& factors);

// Validates an arbitrary square table. Throws NoIdentityError,
// NotAssociativeError, or NoInverseError naming a witness.
FiniteGroup make_from_cayley(std::vector<std::vector<int>> table);

// Least m >= 1 with x^m = e.
int element_order(const FiniteGroup& g, int x);

// {x^m : m >= 0}, sorted ascending. Size equals element_order(g, x).
std::vector<int> cyclic_subgroup(const FiniteGroup& g, int x);

// Non-identity elements x with x*x = e, sorted ascending.
std::vector<int> involutions(const FiniteGroup& g);

bool is_cyclic(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

// Prime factorization of n >= 1, ascending primes, exponents >= 1.
std::vector<std::pair<long long, int>> prime_factorization(long long n);

}  // namespace pgmd

#endif  // PGMD_GROUP_HPP
