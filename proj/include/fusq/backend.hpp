#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fusq/linalg.hpp"
#include "fusq/matrix.hpp"

namespace fusq {

/// Finite group given by its Cayley table; element 0 is the unit.
struct GroupTable {
    std::vector<std::vector<int>> mul;

    int order() const { return static_cast<int>(mul.size()); }
    int times(int a, int b) const { return mul[a][b]; }
    int inverse(int a) const;
    int element_order(int a) const;
    long exponent() const;
    bool is_abelian() const;
    void validate() const;

    static GroupTable cyclic(int n);
    static GroupTable klein_four();
    static GroupTable quaternion8();
    /// Dicyclic group of order 4n (n >= 1); quaternion8() is the n = 2 case.
    static GroupTable binary_dihedral(int n);
};

/// One summand of an object: a tensor word of simples together with the
/// global basis indices it occupies, listed in local Kronecker order. Slots
/// need not be contiguous (Kronecker products interleave them), but they
/// always partition the index range.
///
/// Word letters are signed: letter l >= 0 is the simple x_l, letter l < 0 is
/// the dual carrier of x_{-l-1} with action rho(g^{-1})^T. Dualizing a letter
/// is the involution l -> -l-1.
struct Slot {
    std::vector<int> word;
    std::vector<int> indices;
};

inline int dual_letter(int l) { return -l - 1; }
inline int letter_simple(int l) { return l >= 0 ? l : -l - 1; }
inline bool letter_is_dual(int l) { return l < 0; }

/// A concrete object of a backend category: an explicit carrier that is a
/// direct sum of tensor words of simples. For pointed backends every basis
/// vector additionally carries a grade.
struct Obj {
    int dim = 0;
    std::vector<Slot> slots;
    std::vector<int> grades;  // pointed only; grade per global basis index

    bool same_carrier(const Obj& o) const;
};

struct Irrep {
    std::string name;
    int dim = 0;
    std::vector<Mat> rho;  // one matrix per group element
};

struct PivotalData {
    Cyclotomic dim;
    int dual = -1;
    int fs = 0;  // -1, 0 (not self-dual), +1
    Cyclotomic twist;
};

/// A skeletal backend category: either vect_G for finite abelian G with
/// trivial associator and a bicharacter braiding, or Rep(G) for a finite
/// group with explicit irreducible matrices and the flip braiding.
class Backend {
public:
    enum class Kind { pointed, rep };

    static Backend pointed(GroupTable g, std::vector<std::vector<long>> braiding_exponents);
    static Backend rep(GroupTable g, std::vector<Irrep> irreps);

    // Built-ins used throughout the test fixtures.
    static Backend pointed_cyclic(int n, long bichar_coeff = 1);  // m(a,b) = coeff*a*b mod n
    static Backend rep_cyclic(int n);
    static Backend rep_z2_sl2();  // Z/2 in SL2; the 2-dim restriction is sgn + sgn
    static Backend rep_z3_sl2();
    static Backend rep_q8();
    static Backend rep_binary_dihedral(int n);

    Kind kind() const { return kind_; }
    const GroupTable& group() const { return group_; }
    const std::vector<Irrep>& irreps() const { return irreps_; }
    const std::vector<std::vector<long>>& braiding_exponents() const { return braid_exp_; }
    long group_exponent() const { return exponent_; }
    /// Conductor of the scalar field the backend naturally lives in.
    long conductor() const { return conductor_; }

    int rank() const;         // number of simples
    int unit_simple() const;  // index of the monoidal unit
    int simple_dim(int i) const;
    int dual_simple(int i) const;
    const Cyclotomic& character(int irrep, int element) const;

    Obj simple_obj(int i) const;
    Obj unit_obj() const;
    Obj tensor(const Obj& a, const Obj& b) const;
    Obj dsum(const Obj& a, const Obj& b) const;
    Obj dual(const Obj& a) const;
    Obj obj_from_summands(const std::vector<int>& simples) const;

    /// rho_a(g) as a dense matrix (rep backends).
    Mat action(const Obj& a, int g) const;
    /// Action of the tensor word alone, in local Kronecker order.
    Mat word_action(const std::vector<int>& word, int g) const;
    int word_dim(const std::vector<int>& word) const;
    int word_grade(const std::vector<int>& word) const;  // pointed

    bool is_morphism(const Mat& t, const Obj& from, const Obj& to) const;

    /// Deterministic basis of Hom(a, b), computed slot-blockwise with the
    /// fixed pivot order; its size equals the character inner product.
    std::vector<Mat> hom_basis(const Obj& a, const Obj& b) const;
    int hom_dim(const Obj& a, const Obj& b) const;

    /// N_{ij}^k as a vector over k.
    std::vector<int> tensor_decompose(int i, int j) const;

    /// Multiplicity vector of an explicit carrier.
    std::vector<int> multiplicities(const Obj& a) const;

    /// Braiding c_{a,b}: a(x)b -> b(x)a of the backend (bicharacter / flip).
    Mat braiding(const Obj& a, const Obj& b) const;

    // Duality data; right duals use ev: a*(x)a -> 1 and coev: 1 -> a(x)a*,
    // left duals use ev_left: a(x)*a -> 1 and coev_left: 1 -> *a(x)a. The
    // pivotal identification of *a with a* is the identity on basis indices.
    Mat ev(const Obj& a) const;
    Mat coev(const Obj& a) const;
    Mat ev_left(const Obj& a) const;
    Mat coev_left(const Obj& a) const;

    PivotalData pivotal_data(int i) const;

    /// Frobenius-Schur indicator by the classical character formula
    /// (rep backends); used as a cross-check against the diagrammatic value.
    int fs_by_characters(int i) const;

    void validate() const;

private:
    Backend() = default;

    Kind kind_ = Kind::pointed;
    GroupTable group_;
    // pointed
    std::vector<std::vector<long>> braid_exp_;
    long exponent_ = 1;
    // rep
    std::vector<Irrep> irreps_;
    std::vector<std::vector<Cyclotomic>> char_table_;
    long conductor_ = 1;

    std::vector<Mat> hom_block(const std::vector<int>& from_word,
                               const std::vector<int>& to_word) const;
};

using BackendPtr = std::shared_ptr<const Backend>;

}  // namespace fusq
