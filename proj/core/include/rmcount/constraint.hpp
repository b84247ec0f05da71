#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "rmcount/bitvec.hpp"

namespace rmcount {

// Number of runlength violations: positions j (0-based, j < n-1) with x_j = 1
// and another 1 within the next min(d, n-1-j) positions. Zero exactly on
// strings with at least d zeros between successive ones, including violations
// whose first index falls within d of the end of the string.
int rll_energy(const BitVector& x, int d);

// |hamming_weight(x) - omega|; requires 0 <= omega <= x.length().
int constant_weight_energy(const BitVector& x, int omega);

enum class ConstraintKind { kRll, kConstantWeight, kCustom };

// A constraint is an energy function E: {0,1}^n -> [0, n] with E(x) = 0
// exactly on the admissible strings. The two built-in kinds cover runlength
// limited and constant-weight sets; custom energies with the same zero-set
// property plug into the samplers and estimators unchanged.
class Constraint {
public:
    static Constraint rll(int d);
    static Constraint constant_weight(int omega);
    static Constraint custom(std::string name, std::function<int(const BitVector&)> energy);

    // Grammar: "rll:<d>" or "weight:<omega>".
    static Constraint parse(std::string_view text);

    ConstraintKind kind() const noexcept { return kind_; }
    int rll_gap() const;
    int target_weight() const;
    const std::string& name() const noexcept { return name_; }

    int energy(const BitVector& x) const;
    bool is_satisfied(const BitVector& x) const { return energy(x) == 0; }

private:
    Constraint(ConstraintKind kind, int param, std::string name)
        : kind_(kind), param_(param), name_(std::move(name)) {}

    ConstraintKind kind_;
    int param_ = 0;
    std::string name_;
    std::function<int(const BitVector&)> custom_;
};

}  // namespace rmcount
