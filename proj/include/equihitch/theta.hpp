#ifndef EQUIHITCH_THETA_HPP
#define EQUIHITCH_THETA_HPP

#include <vector>

#include "equihitch/cover.hpp"
#include "equihitch/errors.hpp"

namespace equihitch {

// Local type of an invariant bundle at a ramification point: the vector
// (k_1,...,k_e) where k_l is the multiplicity of the eigenvalue xi^l of the
// linearization, xi a primitive e-th root of unity. Entries may vanish; the
// total sum is the rank r > 0.
class LocalType {
public:
    explicit LocalType(std::vector<int> multiplicities);

    int ram_index() const { return static_cast<int>(mult_.size()); }  // e
    int rank() const { return rank_; }                                // r
    int nonzero_count() const;                                        // f

    // Multiplicity of eigenvalue xi^l, 1 <= l <= e.
    int multiplicity(int l) const;
    const std::vector<int>& multiplicities() const { return mult_; }

    // The exponents l with k_l > 0, increasing (1-based).
    std::vector<int> nonzero_exponents() const;

    friend bool operator==(const LocalType& a, const LocalType& b) { return a.mult_ == b.mult_; }
    friend bool operator!=(const LocalType& a, const LocalType& b) { return !(a == b); }
    friend bool operator<(const LocalType& a, const LocalType& b) { return a.mult_ < b.mult_; }

private:
    std::vector<int> mult_;
    int rank_ = 0;
};

// The nonzero multiplicities of a local type sorted decreasingly (the row
// lengths of the associated diagram). Depends only on the multiset of k's,
// so it is invariant under shifts.
class YoungDiagram {
public:
    explicit YoungDiagram(const LocalType& t);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }     // f
    int cells() const { return cells_; }                             // r
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

private:
    std::vector<int> parts_;
    int cells_ = 0;
};

// Tuple of local types, one per branch point, all of the same rank. For an
// unramified cover the tuple is empty and the rank is carried explicitly.
class GlobalType {
public:
    GlobalType(int rank, std::vector<LocalType> local_types);

    int rank() const { return rank_; }
    const std::vector<LocalType>& local_types() const { return types_; }
    std::size_t size() const { return types_.size(); }
    const LocalType& at(std::size_t q) const { return types_.at(q); }

    friend bool operator==(const GlobalType& a, const GlobalType& b) {
        return a.rank_ == b.rank_ && a.types_ == b.types_;
    }
    friend bool operator!=(const GlobalType& a, const GlobalType& b) { return !(a == b); }

private:
    int rank_;
    std::vector<LocalType> types_;
};

// Throws input_error unless g has one local type per branch point with
// matching ramification indices.
void require_compatible(const CoverData& cover, const GlobalType& g);

// Cyclic right-shift by j positions, 0 <= j < e: the type of the linearization
// multiplied by xi^j. shift(t,0) == t.
LocalType shift(const LocalType& t, int j);

// mu(j) = number of entries with k >= j, j >= 1.
int mu(const LocalType& t, int j);

// delta(i) = column index of the i-th cell when the Young diagram is filled
// column by column; equivalently the least j with sum_{k<=j} mu(k) >= i.
// Requires 1 <= i <= r.
int delta(const LocalType& t, int i);

// Representative of the simultaneous-shift equivalence class: the
// lexicographically least tuple over the lcm(e_q) global shifts.
GlobalType canonical_form(const GlobalType& g);

// All compositions of r into e nonnegative parts, lexicographically
// increasing; C(r+e-1, e-1) of them.
std::vector<LocalType> enumerate_local_types(int r, int e);

// One canonical representative per shift-equivalence class of global types of
// rank r on the given cover, with the number of raw tuples in each orbit.
struct GlobalClass {
    GlobalType representative;
    long long orbit_size;
};
std::vector<GlobalClass> enumerate_global_classes_detailed(const CoverData& cover, int r);
std::vector<GlobalType> enumerate_global_classes(const CoverData& cover, int r);

// Number of raw tuples: product over branch points of C(r+e_q-1, e_q-1).
long long count_global_tuples(const CoverData& cover, int r);

} // namespace equihitch

#endif
