#ifndef PLATEAU_CONSTRUCT_HPP
#define PLATEAU_CONSTRUCT_HPP

#include <optional>
#include <string>

#include "plateau/linear_code.hpp"
#include "plateau/plateaued.hpp"

namespace plateau {

/// Generator rows of the full-evaluation code: the all-ones row, the row of
/// function values, then trace(alpha^j * d_i) for j = 0..m-1, with columns in
/// the canonical element order (0 last).
FpMatrix cbar_rows(const PFunction& f);

/// The [q, m+2] code spanned by cbar_rows. Throws DegenerateRowsError when
/// the function is affine and the rows collapse.
LinearCode build_cbar(const PFunction& f);

/// The subcode without the all-ones row, dimension m+1.
LinearCode build_cf(const PFunction& f);

/// build_cf punctured at the zero coordinate (the last column, where every
/// codeword vanishes): an [q-1, m+1] code.
LinearCode build_cstar(const PFunction& f);

/// cbar_rows with the function row replaced by f + 1; spans the same code.
FpMatrix g1_rows(const PFunction& f);

/// The [q+m+2, m+2] code generated by [I : G1].
LinearCode build_extended(const PFunction& f);

struct ConstructionBundle {
    PFunction f;
    WalshProfile profile;
    LinearCode cbar;
    LinearCode cf;
    LinearCode cstar;
    FpMatrix g1;
    LinearCode extended;
};

ConstructionBundle build_bundle(const PFunction& f);

struct SelfDualResult {
    std::optional<LinearCode> code;
    std::string violated;  // failed existence condition when code is empty
};

/// Extends a self-orthogonal code to a self-dual one containing it, when the
/// existence conditions on (p, n) hold: n even for p = 2 or p = 1 mod 4,
/// n = 0 mod 4 for p = 3 mod 4. The extension adjoins, one at a time, the
/// first isotropic vector of the dual quotient in odometer order, which makes
/// the output deterministic. Throws NotSelfOrthogonalError on bad input.
SelfDualResult extend_to_self_dual(const LinearCode& code);

}  // namespace plateau

#endif
