#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "distrib/kcontact.hpp"

namespace kontact {

/// Structure constants c_ijk with the convention [X_i, X_j] = sum_k c_ijk X_k;
/// only i < j entries are stored (indices are 1-based as printed).
class StructureConstants {
public:
    explicit StructureConstants(int dimension) : dim_(dimension) {}

    int dimension() const { return dim_; }

    void set(int i, int j, int k, const Rat& c);
    Rat get(int i, int j, int k) const;

    const std::map<std::tuple<int, int, int>, Rat>& entries() const { return c_; }

    /// sum_m (c_ijm c_mkl + c_jkm c_mil + c_kim c_mjl) = 0 for all i<j<k, l.
    bool jacobi_holds() const;

    bool operator==(const StructureConstants& o) const {
        return dim_ == o.dim_ && c_ == o.c_;
    }

    std::string str() const;

private:
    int dim_;
    std::map<std::tuple<int, int, int>, Rat> c_;
};

/// Rational constants a with x = sum_i a_i basis_i as an exact identity, or
/// nullopt when no constant-coefficient combination exists.
std::optional<std::vector<Rat>> constant_decompose(const VectorField& x,
                                                   std::span<const VectorField> basis);

struct ClosureResult {
    enum class Status { Closed, NotClosedWithinBound };
    Status status = Status::Closed;
    std::vector<VectorField> basis;
    std::optional<StructureConstants> constants;
};

/// Adjoins brackets that fail constant decomposition, in (i, j) lexicographic
/// order, until closed or the dimension bound is exceeded. New basis elements
/// are normalized: denominators cleared, content reduced, and the leading
/// coefficient of the highest nonzero component made positive.
ClosureResult bracket_closure(std::span<const VectorField> seed, int max_dim);

struct ConstantsEntry {
    int i, j;
    bool decomposable;
    std::vector<Rat> computed;  // empty when not decomposable
    std::vector<Rat> expected;
    bool match;
};

struct ConstantsCheck {
    bool is_vg_basis = true;  // every bracket decomposed
    bool all_match = true;
    std::vector<ConstantsEntry> entries;  // mismatching / non-decomposable pairs only
};

ConstantsCheck verify_structure_constants(std::span<const VectorField> basis,
                                          const StructureConstants& expected);

struct AutomorphicVerdict {
    bool pass = false;
    std::string detail;
    std::optional<Locus> locus;
};

/// Basis size equals the chart dimension and the basis spans generically.
AutomorphicVerdict is_locally_automorphic(std::span<const VectorField> basis);

}  // namespace kontact
