#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/mw/section.hpp"

namespace qtoric {

// h1^p F1 + h2^q F2 + h3^r F3 = 0 among homogeneous polynomials.
struct QTRel {
    std::array<int, 3> type{2, 3, 6};
    std::array<TriPoly, 3> F;
    std::array<TriPoly, 3> h;

    TriPoly sum() const;  // the left-hand side
    std::string type_string() const;
};

enum class EllipticType { T236, T333, T244, T2222 };

const char* elliptic_type_name(EllipticType t);

// Exactly the orbifold index tuples with sum 1/m_i = n - 2 (order ignored); entries must be >= 2.
std::optional<EllipticType> qt_elliptic_type(const std::vector<int>& m);

enum class QTVerdict { Ok, FailsSum, FailsDegrees, NotHomogeneous };

const char* qt_verdict_name(QTVerdict v);

struct QTReport {
    QTVerdict verdict = QTVerdict::Ok;
    std::optional<int> kappa;
    std::optional<EllipticType> elliptic;
    std::optional<Rat> omega;      // kappa - sum deg h_i, elliptic types only
    bool omega_matches = true;     // omega == sum deg F_i / m_i
    TriPoly residual;
};

QTReport qt_verify(const QTRel& rel);

// Some lambda with hbar_i^{e_i} Fbar_i = lambda h_i^{e_i} F_i for all i and hbar1 hbar2 hbar3 = lambda h1 h2 h3.
bool qt_equivalent(const QTRel& a, const QTRel& b);

// Type (2,3,6) only: (1, 1, F1^3 F2^2 F3; F1^2 F2 h1, F1 F2 h2, h3).
QTRel qt_normal_form_236(const QTRel& rel);

// Relation c1 h1^2 + c2 h2^3 + F3 h3^6 = 0 with constants c1, c2 and F3 = -nu F for a constant nu.
// A = (c2/nu)^(1/3) h2 / h3^2, B = (c1/nu)^(1/2) h1 / h3^3 at z = 1. The roots must exist in the
// field (rational, or exactly 1 otherwise). The one-argument form takes F = -F3.
Section section_from_qt(const QTRel& rel, const CurveF& C);
Section section_from_qt(const QTRel& rel);

// Relation g^2 + f^3 - F h^6 = 0 of type (2,3,6) with deg f = 2(deg h + k), deg g = 3(deg h + k).
QTRel qt_from_section(const Section& s, const CurveF& C);

// C in the coordinates (X, Y, Z) = (l0, l1, l2), then X -> x^m, Y -> y^m, Z -> z^m.
TriPoly kummer_pullback(const TriPoly& C, int m, const std::optional<std::array<TriPoly, 3>>& lines = std::nullopt);

}  // namespace qtoric
