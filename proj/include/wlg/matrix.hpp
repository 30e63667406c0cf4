#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "wlg/errors.hpp"

namespace wlg {

/// 2x2 integer matrix ((a,b),(c,d)) with determinant +1 or -1.
/// Entries are exact 64-bit integers; arithmetic is overflow-checked and
/// throws Error(Overflow) instead of wrapping.
struct GluingMatrix {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    friend bool operator==(const GluingMatrix&, const GluingMatrix&) = default;
    friend auto operator<=>(const GluingMatrix&, const GluingMatrix&) = default;
};

inline constexpr GluingMatrix kIdentity{1, 0, 0, 1};
inline constexpr GluingMatrix kMinusIdentity{-1, 0, 0, -1};
// The two quarter-turn matrices allowed as the exceptional-path product.
inline constexpr GluingMatrix kRotationPlus{0, -1, 1, 0};
inline constexpr GluingMatrix kRotationMinus{0, 1, -1, 0};

std::int64_t determinant(const GluingMatrix& m);
std::int64_t trace(const GluingMatrix& m);
bool is_unimodular(const GluingMatrix& m); // det in {+1,-1}

GluingMatrix multiply(const GluingMatrix& m1, const GluingMatrix& m2);
GluingMatrix negate(const GluingMatrix& m);
GluingMatrix inverse(const GluingMatrix& m); // requires det +-1

/// The matrix an edge contributes to an oriented path: the stored matrix if
/// the edge points along the path, its inverse otherwise.
GluingMatrix path_matrix(const GluingMatrix& m, bool edge_orientation_agrees);

bool equal_up_to_sign(const GluingMatrix& m1, const GluingMatrix& m2);

enum class FormKind {
    PlusIdentity,
    MinusIdentity,
    LowerUnipotent, // sign * ((1,0),(k,1)) written as ((s,0),(k,s))
    V5RepellerForm, // sign * ((1,-2),(1-t,2t-1))
    V5AttractorForm, // sign * ((2t-1,2),(t-1,1))
    Rotation,       // sign * ((0,-1),(1,0))
    Other,
};

struct FormTag {
    FormKind kind = FormKind::Other;
    int sign = +1;            // meaningful for every kind except Other
    std::int64_t param = 0;   // k for LowerUnipotent, t for the V5 forms

    friend bool operator==(const FormTag&, const FormTag&) = default;
};

/// Canonical-form classification. Precedence when families overlap:
/// identity tags win over LowerUnipotent(k=0), Rotation next, then
/// V5RepellerForm before V5AttractorForm (they coincide at t=0 with
/// opposite signs).
FormTag classify_form(const GluingMatrix& m);

/// Direction-specific matchers for the twisted-saddle forms; a matrix can
/// fit both families, so the edge orientation picks the reading.
std::optional<std::pair<std::int64_t, int>> match_v5_attractor(const GluingMatrix& m);
std::optional<std::pair<std::int64_t, int>> match_v5_repeller(const GluingMatrix& m);

/// True for +-((1,0),(k,1)), the family of non-exceptional saddle-leaf
/// matrices (identity matrices included).
bool in_unipotent_family(const GluingMatrix& m);

const char* form_kind_name(FormKind kind);

} // namespace wlg
