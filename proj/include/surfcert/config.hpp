#pragma once

#include "surfcert/multipoly.hpp"
#include "surfcert/pencil.hpp"
#include "surfcert/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace surfcert {

// Coordinate literal a + b*sqrt(radicand); radicand 0 means plain rational.
struct Coordinate {
    Rational a;
    Rational b;
    long long radicand = 0;

    bool is_rational() const { return radicand == 0 || b.is_zero(); }
    bool fits_field(long long d) const { return is_rational() || radicand == d; }
    std::string str() const;
};

using ClaimedPoint = std::array<Coordinate, 3>;

struct ConfigError : std::runtime_error {
    ConfigError(int line, const std::string& what)
        : std::runtime_error("config line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

struct PipelineConfig {
    std::string name = "custom";
    Rational curve_a, curve_b;
    long long quad_d = -1;
    PolyQ pencil_f, pencil_g;
    PolyQ gamma_num, gamma_den;
    long long prime_bound = 50;
    std::vector<ClaimedPoint> claimed_k_points;
    std::vector<ClaimedPoint> claimed_l_points;
    std::optional<std::vector<P1Point>> critical_locus_override;
    bool has_curve = false;

    std::string serialize() const;
};

PipelineConfig parse_config(const std::string& text);

// The built-in instance: curve w1^2 w2 = w0^3 - 16 w2^3 over Q with the
// conic pencil (x0^2+x1^2-x2^2, x0^2-x1^2) and the degree-6 covering
// (w0 w2 + w1^2 + 16 w2^2 : w0 w1 + w1 w2).
PipelineConfig builtin_config(const std::string& which);

}  // namespace surfcert
