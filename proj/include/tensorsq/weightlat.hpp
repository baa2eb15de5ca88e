#ifndef TENSORSQ_WEIGHTLAT_HPP
#define TENSORSQ_WEIGHTLAT_HPP

#include <string>
#include <vector>

#include "tensorsq/young.hpp"

namespace tensorsq {

/// An element of the affine weight lattice, in the basis Lambda_0, ...,
/// Lambda_{n-1}, delta.
class WeightVector
{
public:
    explicit WeightVector(int n);

    static WeightVector fundamental(int t, int n);
    static WeightVector null_root(int n);

    int modulus() const { return static_cast<int>(lambda_.size()); }
    // Index taken mod n.
    long long lambda(int t) const;
    long long delta() const { return delta_; }
    long long level() const;

    WeightVector &operator+=(const WeightVector &o);
    WeightVector &operator-=(const WeightVector &o);
    WeightVector &operator*=(long long c);
    friend WeightVector operator+(WeightVector a, const WeightVector &b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector &b) { return a -= b; }
    friend WeightVector operator*(long long c, WeightVector a) { return a *= c; }
    friend bool operator==(const WeightVector &, const WeightVector &) = default;

    std::string to_string() const;

private:
    void require_same_modulus(const WeightVector &o) const;

    std::vector<long long> lambda_;
    long long delta_ = 0;
};

// alpha_i = 2 Lambda_i - Lambda_{i-1} - Lambda_{i+1} + [i == 0] delta.
WeightVector simple_root(int i, int n);

// Lambda_0 minus the sum of alpha_t over the cells of color t.
WeightVector weight_of(const ColoredDiagram &d);

/// Component B(Lambda_i + Lambda_{n-i} - k delta) of the tensor square.
struct ComponentLabel {
    int i = 0;
    int k = 0;
    friend auto operator<=>(const ComponentLabel &, const ComponentLabel &) = default;
};

WeightVector component_weight(ComponentLabel label, int n);

// Reads (i, k) off 2 Lambda_0 - sum c_t alpha_t; throws unless p is in C_n
// and the weight has the expected shape.
ComponentLabel classify_maximal(const Partition &p, int n);

// min{(lambda_l - s_{l-1}) mod n, (-s_l) mod n} for the last block l.
int closed_form_i(const Partition &p, int n);

} // namespace tensorsq

#endif
