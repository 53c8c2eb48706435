#pragma once

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gauging/errors.hpp"

namespace gauging {

// Residue tuple indexing an element of a product of cyclic groups. The same
// tuples index the character group: chi = (k_1, ..., k_r) stands for the
// character chi(g) = exp(2*pi*i * sum_i k_i g_i / n_i).
using Tuple = Eigen::VectorXi;

bool tuple_less(const Tuple& a, const Tuple& b);

// Exact phase in Q/Z, stored as a reduced fraction with 0 <= num < den.
class PhaseQZ {
  public:
    PhaseQZ() = default;
    PhaseQZ(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    PhaseQZ operator+(const PhaseQZ& o) const;
    PhaseQZ operator-(const PhaseQZ& o) const;
    PhaseQZ operator-() const;
    bool operator==(const PhaseQZ& o) const = default;

    // e^{2 pi i num/den}
    std::complex<double> unit() const;
    // "p/q"
    std::string str() const;
    static PhaseQZ parse(const std::string& text);

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

struct FiniteAbelianGroup {
    Eigen::VectorXi orders;  // cyclic factors n_i >= 1
    std::int64_t size = 1;   // prod n_i
    std::int64_t exponent = 1;

    int factors() const { return static_cast<int>(orders.size()); }
    bool valid_tuple(const Tuple& t) const;
    Tuple zero() const { return Tuple::Zero(orders.size()); }
    // unit tuple of cyclic factor k (the zero tuple when n_k == 1)
    Tuple unit(int k) const;
    Tuple reduce(const Tuple& t) const;
    Tuple add(const Tuple& a, const Tuple& b) const;
    Tuple neg(const Tuple& a) const;
    Tuple scale(std::int64_t m, const Tuple& a) const;

    // Mixed-radix index with factor 0 most significant; fixes the canonical
    // enumeration order used by the dense engine and the golden files.
    std::int64_t index_of(const Tuple& t) const;
    Tuple tuple_at(std::int64_t index) const;
    std::vector<Tuple> elements() const;

    bool operator==(const FiniteAbelianGroup& o) const { return orders == o.orders; }
};

FiniteAbelianGroup make_group(const std::vector<int>& orders);

// Exponent of chi(g): sum_i chi_i g_i / n_i mod 1. Symmetric in its two
// arguments under the fixed identification of G with its character group.
PhaseQZ pair_phase(const FiniteAbelianGroup& group, const Tuple& chi, const Tuple& g);

struct Subgroup {
    FiniteAbelianGroup group;
    std::vector<Tuple> generators;
    std::vector<Tuple> members;  // sorted lexicographically

    std::int64_t size() const { return static_cast<std::int64_t>(members.size()); }
    bool contains(const Tuple& t) const;
    bool is_whole_group() const { return size() == group.size; }
};

Subgroup subgroup_closure(const FiniteAbelianGroup& group, const std::vector<Tuple>& generators,
                          std::int64_t cap = 4096);

// All characters that evaluate trivially on every member of h. The result is
// a subgroup of the character group of size |G|/|H|.
std::vector<Tuple> annihilator(const FiniteAbelianGroup& group, const Subgroup& h);
Subgroup annihilator_subgroup(const FiniteAbelianGroup& group, const Subgroup& h);

// A small generating set for a member list (greedy: adds members that enlarge
// the closure). Used to emit compact per-generator label families.
std::vector<Tuple> minimal_generators(const FiniteAbelianGroup& group,
                                      const std::vector<Tuple>& members);

}  // namespace gauging
