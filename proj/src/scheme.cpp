#include "mogap/scheme.hpp"

#include "mogap/errors.hpp"

namespace mogap {

void CoeffScheme::validate() const {
    if (!(r >= 1.0)) throw DomainError("scheme: r must be >= 1");
    if (!f1.has_integer_exponents() || !f1t.has_integer_exponents() || !P.has_integer_exponents()) {
        throw DomainError("scheme: polynomials must have integer exponents");
    }
    if (!P.is_zero() && P.terms().front().exponent < 0.5) {
        throw DomainError("scheme: P must vanish at 0 (no constant term)");
    }
}

CoeffScheme CoeffScheme::from_coefficients(double r, std::vector<double> f1, std::vector<double> f1t,
                                           std::vector<double> P) {
    CoeffScheme s{r, FracPoly::from_coefficients(f1), FracPoly::from_coefficients(f1t),
                  FracPoly::from_coefficients(P)};
    s.validate();
    return s;
}

FracPoly p1_of(const CoeffScheme& scheme) {
    if (!scheme.P.is_zero() && scheme.P.terms().front().exponent < 0.5) {
        throw DomainError("P1: P has a constant term");
    }
    return divide_by_x(scheme.P);
}

FracPoly p2_of(const CoeffScheme& scheme) {
    if (!scheme.P.is_zero() && scheme.P.terms().front().exponent < 0.5) {
        throw DomainError("P2: P has a constant term");
    }
    return divide_by_x(mul(scheme.P, scheme.P));
}

const std::vector<TableRow>& table1_rows() {
    static const std::vector<TableRow> rows = {
        {"table1-row1", 0.515398,
         CoeffScheme::from_coefficients(1.18, {1.95, 1.47, -1.07, -0.29}, {-0.7, -1.92}, {0.0, 0.0, 1.0})},
        {"table1-row2", 0.515397,
         CoeffScheme::from_coefficients(1.18, {1.655, 1.25, -0.886, -0.25}, {-0.57, -1.6},
                                        {0.0, 0.0, 1.0, 0.036})},
        {"table1-row3", 0.515396,
         CoeffScheme::from_coefficients(1.18, {1.78, 1.017, 0.2, -1.56, 0.45, -0.06, 0.05},
                                        {-0.629, -0.88, -1.799}, {0.0, 0.0, 1.0, 0.083})},
    };
    return rows;
}

const TableRow& preset(std::string_view name) {
    for (const auto& row : table1_rows()) {
        if (row.name == name) return row;
    }
    throw ValidationError("unknown preset '" + std::string(name) + "'");
}

}  // namespace mogap
