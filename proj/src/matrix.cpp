#include "wlg/matrix.hpp"

namespace wlg {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::WrongLabel: return "WrongLabel";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotNeat: return "NotNeat";
    case ErrorCode::NotNeatSimple: return "NotNeatSimple";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::MissingComponent: return "MissingComponent";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::UnsupportedCount: return "UnsupportedCount";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw Error(ErrorCode::Overflow, "matrix entry product exceeds 64 bits");
    return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw Error(ErrorCode::Overflow, "matrix entry sum exceeds 64 bits");
    return r;
}

std::int64_t checked_neg(std::int64_t x) {
    std::int64_t r;
    if (__builtin_sub_overflow(std::int64_t{0}, x, &r))
        throw Error(ErrorCode::Overflow, "matrix entry negation exceeds 64 bits");
    return r;
}

} // namespace

std::int64_t determinant(const GluingMatrix& m) {
    return checked_add(checked_mul(m.a, m.d), checked_neg(checked_mul(m.b, m.c)));
}

std::int64_t trace(const GluingMatrix& m) {
    return checked_add(m.a, m.d);
}

bool is_unimodular(const GluingMatrix& m) {
    std::int64_t det = determinant(m);
    return det == 1 || det == -1;
}

GluingMatrix multiply(const GluingMatrix& m1, const GluingMatrix& m2) {
    return GluingMatrix{
        checked_add(checked_mul(m1.a, m2.a), checked_mul(m1.b, m2.c)),
        checked_add(checked_mul(m1.a, m2.b), checked_mul(m1.b, m2.d)),
        checked_add(checked_mul(m1.c, m2.a), checked_mul(m1.d, m2.c)),
        checked_add(checked_mul(m1.c, m2.b), checked_mul(m1.d, m2.d)),
    };
}

GluingMatrix negate(const GluingMatrix& m) {
    return GluingMatrix{checked_neg(m.a), checked_neg(m.b), checked_neg(m.c), checked_neg(m.d)};
}

GluingMatrix inverse(const GluingMatrix& m) {
    std::int64_t det = determinant(m);
    if (det == 1)
        return GluingMatrix{m.d, checked_neg(m.b), checked_neg(m.c), m.a};
    if (det == -1)
        return GluingMatrix{checked_neg(m.d), m.b, m.c, checked_neg(m.a)};
    throw Error(ErrorCode::InvalidMatrix, "inverse requires determinant +1 or -1");
}

GluingMatrix path_matrix(const GluingMatrix& m, bool edge_orientation_agrees) {
    return edge_orientation_agrees ? m : inverse(m);
}

bool equal_up_to_sign(const GluingMatrix& m1, const GluingMatrix& m2) {
    return m1 == m2 || m1 == negate(m2);
}

FormTag classify_form(const GluingMatrix& m) {
    if (m == kIdentity)
        return FormTag{FormKind::PlusIdentity, +1, 0};
    if (m == kMinusIdentity)
        return FormTag{FormKind::MinusIdentity, -1, 0};
    if (m.b == 0 && m.a == 1 && m.d == 1)
        return FormTag{FormKind::LowerUnipotent, +1, m.c};
    if (m.b == 0 && m.a == -1 && m.d == -1)
        return FormTag{FormKind::LowerUnipotent, -1, m.c};
    if (m == kRotationPlus)
        return FormTag{FormKind::Rotation, +1, 0};
    if (m == kRotationMinus)
        return FormTag{FormKind::Rotation, -1, 0};
    // ((1,-2),(1-t,2t-1)) and its negative
    if (m.a == 1 && m.b == -2) {
        std::int64_t t = (m.d + 1) / 2;
        if (2 * t - 1 == m.d && m.c == 1 - t)
            return FormTag{FormKind::V5RepellerForm, +1, t};
    }
    if (m.a == -1 && m.b == 2) {
        std::int64_t t = (1 - m.d) / 2;
        if (-(2 * t - 1) == m.d && m.c == t - 1)
            return FormTag{FormKind::V5RepellerForm, -1, t};
    }
    // ((2t-1,2),(t-1,1)) and its negative
    if (m.b == 2 && m.d == 1) {
        std::int64_t t = (m.a + 1) / 2;
        if (2 * t - 1 == m.a && m.c == t - 1)
            return FormTag{FormKind::V5AttractorForm, +1, t};
    }
    if (m.b == -2 && m.d == -1) {
        std::int64_t t = (1 - m.a) / 2;
        if (-(2 * t - 1) == m.a && m.c == 1 - t)
            return FormTag{FormKind::V5AttractorForm, -1, t};
    }
    return FormTag{FormKind::Other, +1, 0};
}

std::optional<std::pair<std::int64_t, int>> match_v5_attractor(const GluingMatrix& m) {
    if (m.b == 2 && m.d == 1) {
        std::int64_t t = (m.a + 1) / 2;
        if (2 * t - 1 == m.a && m.c == t - 1) return std::make_pair(t, +1);
    }
    if (m.b == -2 && m.d == -1) {
        std::int64_t t = (1 - m.a) / 2;
        if (-(2 * t - 1) == m.a && m.c == 1 - t) return std::make_pair(t, -1);
    }
    return std::nullopt;
}

std::optional<std::pair<std::int64_t, int>> match_v5_repeller(const GluingMatrix& m) {
    if (m.a == 1 && m.b == -2) {
        std::int64_t t = (m.d + 1) / 2;
        if (2 * t - 1 == m.d && m.c == 1 - t) return std::make_pair(t, +1);
    }
    if (m.a == -1 && m.b == 2) {
        std::int64_t t = (1 - m.d) / 2;
        if (-(2 * t - 1) == m.d && m.c == t - 1) return std::make_pair(t, -1);
    }
    return std::nullopt;
}

bool in_unipotent_family(const GluingMatrix& m) {
    FormKind k = classify_form(m).kind;
    return k == FormKind::PlusIdentity || k == FormKind::MinusIdentity ||
           k == FormKind::LowerUnipotent;
}

const char* form_kind_name(FormKind kind) {
    switch (kind) {
    case FormKind::PlusIdentity: return "plus-identity";
    case FormKind::MinusIdentity: return "minus-identity";
    case FormKind::LowerUnipotent: return "lower-unipotent";
    case FormKind::V5RepellerForm: return "v5-repeller-form";
    case FormKind::V5AttractorForm: return "v5-attractor-form";
    case FormKind::Rotation: return "rotation";
    case FormKind::Other: return "other";
    }
    return "other";
}

} // namespace wlg
