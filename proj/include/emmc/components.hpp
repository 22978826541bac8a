#pragma once

// Explicit component kernel in a flat chart: topology description function of one
// component, its design gradient, and Kreisselmeier-Steinhauser aggregation.

#include "emmc/error.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace emmc {

/// Seven design variables of one component, in flattening order.
template <typename Scalar>
struct Component {
    Scalar x0{}, y0{};       // center, chart units
    Scalar theta{};          // rotation, radians
    Scalar half_length{};    // L
    Scalar t1{}, t2{}, t3{}; // half-thickness at x' = -L, x' = +L and x' = 0

    static constexpr int kVariables = 7;
    using Vector7 = Eigen::Matrix<Scalar, 7, 1>;

    Vector7 to_vector() const
    {
        Vector7 d;
        d << x0, y0, theta, half_length, t1, t2, t3;
        return d;
    }

    template <typename Derived>
    static Component from_vector(const Eigen::MatrixBase<Derived>& d)
    {
        return Component{d(0), d(1), d(2), d(3), d(4), d(5), d(6)};
    }

    bool operator==(const Component&) const = default;
};

namespace detail {

template <typename Scalar>
struct LocalFrame {
    Scalar c, s, xl, yl;
};

template <typename Scalar>
LocalFrame<Scalar> to_local(const Eigen::Matrix<Scalar, 2, 1>& p, const Component<Scalar>& comp)
{
    using std::cos;
    using std::sin;
    const Scalar c = cos(comp.theta), s = sin(comp.theta);
    const Scalar dx = p(0) - comp.x0, dy = p(1) - comp.y0;
    return {c, s, c * dx + s * dy, -s * dx + c * dy};
}

/// Quadratic thickness profile through (-L, t1), (0, t3), (L, t2).
template <typename Scalar>
Scalar profile(const Component<Scalar>& comp, Scalar xl)
{
    const Scalar L = comp.half_length;
    const Scalar a = (comp.t1 + comp.t2 - Scalar(2) * comp.t3) / (Scalar(2) * L * L);
    const Scalar b = (comp.t2 - comp.t1) / (Scalar(2) * L);
    return a * xl * xl + b * xl + comp.t3;
}

template <typename Scalar>
void check_params(const Component<Scalar>& comp)
{
    if (!(comp.half_length > Scalar(0)))
        throw ComponentError("component half-length must be positive");
    if (!(comp.t1 > Scalar(0) && comp.t2 > Scalar(0) && comp.t3 > Scalar(0)))
        throw ComponentError("component half-thicknesses must be positive");
}

/// Profile value after the positivity guard. Inside the span a non-positive profile is an
/// error unless a floor is supplied; outside the span it is clamped to a tiny positive value.
template <typename Scalar>
Scalar guarded_profile(const Component<Scalar>& comp, Scalar xl, Scalar floor, bool& clamped)
{
    using std::abs;
    using std::max;
    const Scalar f = profile(comp, xl);
    const Scalar tiny = Scalar(1e-12) * comp.half_length;
    const Scalar lo = max(floor, tiny);
    clamped = false;
    if (f <= lo) {
        if (floor <= Scalar(0) && abs(xl) <= comp.half_length && f <= Scalar(0))
            throw ComponentError("component thickness profile f(x') <= 0 inside the component span");
        clamped = true;
        return lo;
    }
    return f;
}

} // namespace detail

/// phi = 1 - ((x'/L)^6 + (y'/f(x'))^6)^(1/6): 1 at the center, > 0 inside, 0 on the
/// boundary, < 0 outside. The 6-norm is evaluated in scaled form so far-away points never
/// overflow. `profile_floor` > 0 clamps the thickness profile instead of raising.
template <typename Scalar>
Scalar component_tdf(const Eigen::Matrix<Scalar, 2, 1>& p, const Component<Scalar>& comp, Scalar profile_floor = Scalar(0))
{
    using std::abs;
    using std::max;
    using std::pow;
    detail::check_params(comp);
    const auto fr = detail::to_local(p, comp);
    bool clamped = false;
    const Scalar f = detail::guarded_profile(comp, fr.xl, profile_floor, clamped);
    const Scalar P = fr.xl / comp.half_length;
    const Scalar Q = fr.yl / f;
    const Scalar r = max(abs(P), abs(Q));
    if (r == Scalar(0))
        return Scalar(1);
    const Scalar a = P / r, b = Q / r;
    return Scalar(1) - r * pow(pow(a, 6) + pow(b, 6), Scalar(1) / Scalar(6));
}

/// Partial derivatives of component_tdf with respect to (x0, y0, theta, L, t1, t2, t3).
/// Undefined at the component center, where it throws.
template <typename Scalar>
Eigen::Matrix<Scalar, 7, 1> component_tdf_grad(const Eigen::Matrix<Scalar, 2, 1>& p, const Component<Scalar>& comp,
                                               Scalar profile_floor = Scalar(0))
{
    using std::abs;
    using std::max;
    using std::pow;
    detail::check_params(comp);
    const auto fr = detail::to_local(p, comp);
    bool clamped = false;
    const Scalar f = detail::guarded_profile(comp, fr.xl, profile_floor, clamped);
    const Scalar L = comp.half_length;
    const Scalar xl = fr.xl, yl = fr.yl;
    const Scalar P = xl / L;
    const Scalar Q = yl / f;
    const Scalar r = max(abs(P), abs(Q));
    if (r == Scalar(0))
        throw ComponentError("component_tdf_grad evaluated at the component center");
    const Scalar norm6 = r * pow(pow(P / r, 6) + pow(Q / r, 6), Scalar(1) / Scalar(6));

    // d phi / dP = -(P/n)^5, d phi / dQ = -(Q/n)^5
    const Scalar dP = -pow(P / norm6, 5);
    const Scalar dQ = -pow(Q / norm6, 5);

    const Scalar two = Scalar(2);
    const Scalar a = (comp.t1 + comp.t2 - two * comp.t3) / (two * L * L);
    const Scalar b = (comp.t2 - comp.t1) / (two * L);
    const Scalar live = clamped ? Scalar(0) : Scalar(1);
    const Scalar df_dxl = live * (two * a * xl + b);
    const Scalar dQ_df = -yl / (f * f);

    const Scalar dphi_dxl = dP / L + dQ * dQ_df * df_dxl;
    const Scalar dphi_dyl = dQ / f;

    const Scalar df_dL = live * (-(comp.t1 + comp.t2 - two * comp.t3) * xl * xl / (L * L * L) - (comp.t2 - comp.t1) * xl / (two * L * L));
    const Scalar df_dt1 = live * (xl * xl / (two * L * L) - xl / (two * L));
    const Scalar df_dt2 = live * (xl * xl / (two * L * L) + xl / (two * L));
    const Scalar df_dt3 = live * (Scalar(1) - xl * xl / (L * L));

    Eigen::Matrix<Scalar, 7, 1> g;
    g(0) = dphi_dxl * (-fr.c) + dphi_dyl * fr.s;
    g(1) = dphi_dxl * (-fr.s) + dphi_dyl * (-fr.c);
    g(2) = dphi_dxl * yl - dphi_dyl * xl;
    g(3) = dP * (-xl / (L * L)) + dQ * dQ_df * df_dL;
    g(4) = dQ * dQ_df * df_dt1;
    g(5) = dQ * dQ_df * df_dt2;
    g(6) = dQ * dQ_df * df_dt3;
    return g;
}

/// ln(sum exp(l v_i)) / l, evaluated as m + ln(sum exp(l (v_i - m))) / l with m = max v_i.
/// Satisfies max(v) <= ks_max(v) <= max(v) + ln(n) / l.
template <typename Derived>
typename Derived::Scalar ks_max(const Eigen::DenseBase<Derived>& values, typename Derived::Scalar l)
{
    using Scalar = typename Derived::Scalar;
    using std::exp;
    using std::log;
    if (values.size() == 0)
        throw Error("ks_max of an empty sequence");
    if (!(l > Scalar(0)))
        throw Error("ks_max requires l > 0");
    const Scalar m = values.maxCoeff();
    if (values.size() == 1)
        return m;
    Scalar sum(0);
    for (Eigen::Index i = 0; i < values.size(); ++i)
        sum += exp(l * (values(i) - m));
    return m + log(sum) / l;
}

/// Softmax weights exp(l v_i) / sum exp(l v_j): the gradient of ks_max. Nonnegative, sum 1.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> ks_max_grad(const Eigen::DenseBase<Derived>& values,
                                                                       typename Derived::Scalar l)
{
    using Scalar = typename Derived::Scalar;
    using std::exp;
    if (values.size() == 0)
        throw Error("ks_max_grad of an empty sequence");
    if (!(l > Scalar(0)))
        throw Error("ks_max_grad requires l > 0");
    const Scalar m = values.maxCoeff();
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> w(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i)
        w(i) = exp(l * (values(i) - m));
    return w / w.sum();
}

/// Components of every patch, flattened patch-major, component-minor, field order
/// (x0, y0, theta, L, t1, t2, t3).
class ComponentSet {
public:
    ComponentSet() = default;
    explicit ComponentSet(std::vector<std::vector<Component<double>>> per_patch) : patches_(std::move(per_patch)) {}

    std::size_t num_patches() const { return patches_.size(); }
    const std::vector<Component<double>>& patch(std::size_t k) const { return patches_.at(k); }
    std::vector<Component<double>>& patch(std::size_t k) { return patches_.at(k); }
    const std::vector<std::vector<Component<double>>>& patches() const { return patches_; }

    std::size_t num_components() const
    {
        std::size_t n = 0;
        for (const auto& p : patches_)
            n += p.size();
        return n;
    }
    std::size_t num_variables() const { return 7 * num_components(); }

    /// Offset of component i of patch k in the flattened vector.
    std::size_t offset(std::size_t k, std::size_t i) const
    {
        std::size_t n = 0;
        for (std::size_t q = 0; q < k; ++q)
            n += patches_[q].size();
        return 7 * (n + i);
    }

    Eigen::VectorXd flatten() const
    {
        Eigen::VectorXd d(static_cast<Eigen::Index>(num_variables()));
        Eigen::Index o = 0;
        for (const auto& p : patches_)
            for (const auto& c : p) {
                d.segment<7>(o) = c.to_vector();
                o += 7;
            }
        return d;
    }

    /// Same patch/component counts, values taken from `d`.
    ComponentSet with_values(const Eigen::VectorXd& d) const
    {
        if (static_cast<std::size_t>(d.size()) != num_variables())
            throw Error("design vector length mismatch");
        ComponentSet out = *this;
        Eigen::Index o = 0;
        for (auto& p : out.patches_)
            for (auto& c : p) {
                c = Component<double>::from_vector(d.segment<7>(o));
                o += 7;
            }
        return out;
    }

    bool operator==(const ComponentSet&) const = default;

private:
    std::vector<std::vector<Component<double>>> patches_;
};

} // namespace emmc
