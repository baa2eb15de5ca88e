#include "tensorsq/weightlat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tensorsq {

WeightVector::WeightVector(int n)
{
    if (n < 2)
        throw std::invalid_argument("modulus must be at least 2");
    lambda_.assign(static_cast<std::size_t>(n), 0);
}

WeightVector WeightVector::fundamental(int t, int n)
{
    WeightVector w(n);
    w.lambda_[static_cast<std::size_t>(residue(t, n))] = 1;
    return w;
}

WeightVector WeightVector::null_root(int n)
{
    WeightVector w(n);
    w.delta_ = 1;
    return w;
}

long long WeightVector::lambda(int t) const
{
    return lambda_[static_cast<std::size_t>(residue(t, modulus()))];
}

long long WeightVector::level() const
{
    return std::accumulate(lambda_.begin(), lambda_.end(), 0LL);
}

void WeightVector::require_same_modulus(const WeightVector &o) const
{
    if (o.modulus() != modulus())
        throw std::invalid_argument("weights of different rank");
}

WeightVector &WeightVector::operator+=(const WeightVector &o)
{
    require_same_modulus(o);
    for (std::size_t t = 0; t < lambda_.size(); ++t)
        lambda_[t] += o.lambda_[t];
    delta_ += o.delta_;
    return *this;
}

WeightVector &WeightVector::operator-=(const WeightVector &o)
{
    require_same_modulus(o);
    for (std::size_t t = 0; t < lambda_.size(); ++t)
        lambda_[t] -= o.lambda_[t];
    delta_ -= o.delta_;
    return *this;
}

WeightVector &WeightVector::operator*=(long long c)
{
    for (auto &x : lambda_)
        x *= c;
    delta_ *= c;
    return *this;
}

std::string WeightVector::to_string() const
{
    std::string s;
    auto term = [&s](long long c, const std::string &name) {
        if (c == 0)
            return;
        if (!s.empty())
            s += c > 0 ? " + " : " - ";
        else if (c < 0)
            s += "-";
        long long a = c < 0 ? -c : c;
        if (a != 1)
            s += std::to_string(a);
        s += name;
    };
    for (std::size_t t = 0; t < lambda_.size(); ++t)
        term(lambda_[t], "L" + std::to_string(t));
    term(delta_, "d");
    return s.empty() ? "0" : s;
}

WeightVector simple_root(int i, int n)
{
    WeightVector a = 2 * WeightVector::fundamental(i, n);
    a -= WeightVector::fundamental(i - 1, n);
    a -= WeightVector::fundamental(i + 1, n);
    if (residue(i, n) == 0)
        a += WeightVector::null_root(n);
    return a;
}

WeightVector weight_of(const ColoredDiagram &d)
{
    if (d.charge() != 0)
        throw std::invalid_argument("weights are defined for charge-0 diagrams");
    const int n = d.modulus();
    WeightVector w = WeightVector::fundamental(0, n);
    auto counts = color_counts(d);
    for (int t = 0; t < n; ++t)
        w -= static_cast<long long>(counts[static_cast<std::size_t>(t)]) * simple_root(t, n);
    return w;
}

WeightVector component_weight(ComponentLabel label, int n)
{
    WeightVector w = WeightVector::fundamental(label.i, n) + WeightVector::fundamental(n - label.i, n);
    w -= static_cast<long long>(label.k) * WeightVector::null_root(n);
    return w;
}

ComponentLabel classify_maximal(const Partition &p, int n)
{
    if (!in_C_n(p, n))
        throw std::invalid_argument("partition " + p.to_string() + " is not in C_" + std::to_string(n));

    ColoredDiagram d(p, n);
    auto counts = color_counts(d);
    WeightVector w = 2 * WeightVector::fundamental(0, n);
    for (int t = 0; t < n; ++t)
        w -= static_cast<long long>(counts[static_cast<std::size_t>(t)]) * simple_root(t, n);

    // The Lambda part must be Lambda_i + Lambda_{n-i}.
    std::vector<int> support;
    for (int t = 0; t < n; ++t) {
        long long c = w.lambda(t);
        if (c < 0 || c > 2)
            throw std::logic_error("unexpected weight " + w.to_string());
        for (long long m = 0; m < c; ++m)
            support.push_back(t);
    }
    if (support.size() != 2 || residue(support[0] + support[1], n) != 0)
        throw std::logic_error("unexpected weight " + w.to_string());

    ComponentLabel label{std::min(support[0], n - support[0]) % n, static_cast<int>(-w.delta())};
    if (label.k != counts[0])
        throw std::logic_error("delta coefficient disagrees with the 0-colored cell count");
    if (p.boxes() != label.i * label.i + (label.k - label.i) * n)
        throw std::logic_error("box count disagrees with the component label");
    return label;
}

int closed_form_i(const Partition &p, int n)
{
    if (p.empty())
        return 0;
    if (!in_C_n(p, n))
        throw std::invalid_argument("partition " + p.to_string() + " is not in C_" + std::to_string(n));
    const std::size_t l = p.distinct_parts();
    const int lam = p.pairs()[l - 1].part;
    return std::min(residue(static_cast<long long>(lam) - p.partial_sum(l - 1), n),
                    residue(-static_cast<long long>(p.partial_sum(l)), n));
}

} // namespace tensorsq
