#pragma once

#include "dhb/construct.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dhb {

using residue = std::uint32_t;

// Square matrix over F_p stored by rows; each row is a sorted list of (column, nonzero value).
// Vectors act on the left: v -> vM. A permutation g becomes the matrix with row i = e_{i^g}.
class SparseMatrix {
public:
    using Row = std::vector<std::pair<std::uint32_t, residue>>;

    SparseMatrix(unsigned p, std::size_t n);  // zero matrix
    static SparseMatrix identity(unsigned p, std::size_t n);
    static SparseMatrix permutation(unsigned p, const Perm& g);

    unsigned modulus() const { return p_; }
    std::size_t size() const { return rows_.size(); }
    const Row& row(std::size_t i) const { return rows_[i]; }
    void set_row(std::size_t i, Row r);  // reduces, sorts and drops zeros
    residue at(std::size_t i, std::size_t j) const;

    bool is_identity() const;
    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    unsigned p_;
    std::vector<Row> rows_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix power(const SparseMatrix& m, unsigned k);  // repeated squaring
std::size_t rank(const SparseMatrix& m);
residue determinant(const SparseMatrix& m);
// Dimension of the kernel of m - 1.
std::size_t fixed_space_dim(const SparseMatrix& m);

// Plain row-major fallback used to cross-check the sparse arithmetic on small sizes.
struct DenseMatrix {
    unsigned p;
    std::size_t n;
    std::vector<residue> a;
    residue& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    residue operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};
DenseMatrix to_dense(const SparseMatrix& m);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
std::size_t dense_rank(DenseMatrix m);
residue dense_determinant(DenseMatrix m);

bool is_primitive_root(residue t, unsigned p);

// Designated points: a -> -a + t1 a', b -> -b + t1 b' in x', all other basis vectors fixed.
struct LiftPoints {
    point a, b, a2, b2;
};

struct LinearTriple {
    unsigned p = 0;
    residue t1 = 0;
    LiftPoints points{};
    Perm xi, yperm;         // the permutations behind xi and y
    SparseMatrix xprime, x, y, z;
    residue det_x = 0, det_y = 0, det_z = 0;
};

// x = x' xi with xi, y the permutation matrices of m. Every relation is checked;
// a failure throws check_error naming the relation.
LinearTriple build_linear_triple(const HurwitzMap& m, const LiftPoints& pts, unsigned p, residue t1);
// Without the x' modification: x = xi, the plain permutation triple.
LinearTriple permutation_triple(const HurwitzMap& m, unsigned p);

struct PositionDims {
    std::string position;  // "x", "y", "z"
    std::size_t dim1, dim2;
    bool ok;
};

struct DimsEvidence {
    std::vector<PositionDims> positions;
    // Cycle counts of the permutations the dimensions should match: xi (minus 2), y, xi y.
    std::size_t xi_cycles1 = 0, xi_cycles2 = 0, xiy_cycles1 = 0, xiy_cycles2 = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Fixed-space dimensions of x, y and z must differ between the triples at every position.
DimsEvidence beauville_dims(const LinearTriple& t1, const LinearTriple& t2);

// The map of a pair member with one more G attached at the first free stock (1)-handle;
// its two remaining (1)-handles are the designated points.
struct LiftSource {
    Assembly map;
    LiftPoints points;
};
LiftSource lift_source(const Assembly& w);

struct LiftReport {
    Plan plan;
    unsigned p = 0;
    residue t1 = 0;
    std::size_t degree = 0;
    LinearTriple triple1, triple2;
    DimsEvidence dims;
    bool ok() const { return dims.ok(); }
};

LiftReport lift_pair(const Plan& plan, unsigned p, residue t1);
// Least primitive root mod p (1 for p = 2).
residue least_primitive_root(unsigned p);

}  // namespace dhb
