#pragma once

#include "affweights/cartan_data.hpp"
#include "affweights/integer.hpp"

#include <initializer_list>
#include <memory>
#include <optional>
#include <vector>

namespace affweights {

namespace detail {

/// Fixed-length coordinate tuple indexed by nodes 0..l.
template <typename Derived, typename Scalar>
class Coordinates {
public:
    Coordinates() = default;
    explicit Coordinates(std::vector<Scalar> values)
        : values_(std::move(values))
    {
    }
    Coordinates(std::initializer_list<long> values)
    {
        for (long v : values)
            values_.emplace_back(v);
    }

    static Derived zero(std::size_t n) { return Derived(std::vector<Scalar>(n, Scalar(0))); }

    std::size_t size() const { return values_.size(); }
    const Scalar& operator[](std::size_t i) const { return values_[i]; }
    Scalar& operator[](std::size_t i) { return values_[i]; }
    const std::vector<Scalar>& values() const { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    friend bool operator==(const Derived& x, const Derived& y) { return x.values_ == y.values_; }
    friend bool operator!=(const Derived& x, const Derived& y) { return !(x == y); }
    friend bool operator<(const Derived& x, const Derived& y) { return x.values_ < y.values_; }

    friend Derived operator+(const Derived& x, const Derived& y)
    {
        Derived out = x;
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += y[i];
        return out;
    }
    friend Derived operator-(const Derived& x, const Derived& y)
    {
        Derived out = x;
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] -= y[i];
        return out;
    }
    friend Derived operator*(const Scalar& s, const Derived& x)
    {
        Derived out = x;
        for (auto& v : out.values_)
            v *= s;
        return out;
    }
    friend Derived operator-(const Derived& x) { return Scalar(-1) * x; }

protected:
    std::vector<Scalar> values_;
};

} // namespace detail

/// Content b of eta = Lambda - sum_i b_i alpha_i. Entries may be negative.
class Content : public detail::Coordinates<Content, Integer> {
public:
    using Coordinates::Coordinates;

    bool nonnegative() const;
};

/// Hub theta_i = <h_i, eta>.
class HubVector : public detail::Coordinates<HubVector, Integer> {
public:
    using Coordinates::Coordinates;

    bool positive() const;
};

/// Element of the Q-span of alpha_0..alpha_l.
class RootVector : public detail::Coordinates<RootVector, Rational> {
public:
    using Coordinates::Coordinates;

    static RootVector from(const Content& b);
    static RootVector simple(std::size_t n, std::size_t i);
    static RootVector delta(const CartanData& data);

    bool integral() const;
    /// Integer coefficients; throws ConsistencyError if not integral.
    Content to_content() const;
};

std::shared_ptr<const CartanData> make_cartan(const AffineType& type);

/// Dominant integral weight Lambda stored by its labels lambda_i = <h_i, Lambda>
/// with delta-coefficient 0.
class HighestWeight {
public:
    /// Throws InvalidInput on wrong length, negative labels or level 0.
    HighestWeight(std::shared_ptr<const CartanData> data, std::vector<Integer> labels);
    HighestWeight(std::shared_ptr<const CartanData> data, std::initializer_list<long> labels);

    /// Sum of fundamental weights Lambda_i, one per listed node (with repeats).
    static HighestWeight from_fundamental(std::shared_ptr<const CartanData> data,
        const std::vector<std::size_t>& nodes);

    const CartanData& data() const { return *data_; }
    const std::shared_ptr<const CartanData>& data_ptr() const { return data_; }
    const std::vector<Integer>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    const Integer& level() const { return level_; }
    HubVector hub() const { return HubVector(labels_); }

    friend bool operator==(const HighestWeight& x, const HighestWeight& y)
    {
        return x.data_->type == y.data_->type && x.labels_ == y.labels_;
    }

private:
    std::shared_ptr<const CartanData> data_;
    std::vector<Integer> labels_;
    Integer level_;
};

/// theta = lambda - A b.
HubVector content_to_hub(const HighestWeight& lambda, const Content& b);

/// sum_i a_i^vee theta_i.
Integer level(const CartanData& data, const HubVector& theta);
inline Integer level(const HighestWeight& lambda) { return lambda.level(); }

/// (Lambda | x).
Rational bilinear(const HighestWeight& lambda, const RootVector& x);
/// (x | y) on the root span.
Rational bilinear_rr(const CartanData& data, const RootVector& x, const RootVector& y);

/// (Lambda | alpha) - (alpha | alpha) / 2 where alpha = sum b_i alpha_i.
Rational defect(const HighestWeight& lambda, const Content& b);

/// Integer content gamma with hub(gamma) = theta, normalised by
/// normalize_maximal; nullopt if theta is not equivalent to the hub of Lambda.
/// Throws LevelMismatch if the levels differ.
std::optional<Content> hub_to_content(const HighestWeight& lambda, const HubVector& theta);

/// gamma - s a with s = min_i floor(gamma_i / a_i).
Content normalize_maximal(const CartanData& data, const Content& gamma);

/// b + s a (i.e. eta - s delta).
Content shift_by_delta(const CartanData& data, const Content& b, const Integer& s);

} // namespace affweights
