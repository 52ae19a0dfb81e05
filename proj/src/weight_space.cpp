#include "affweights/weight_space.hpp"

#include "affweights/errors.hpp"
#include "affweights/smith_normal_form.hpp"

#include <algorithm>

namespace affweights {

bool Content::nonnegative() const
{
    return std::all_of(begin(), end(), [](const Integer& x) { return x >= 0; });
}

bool HubVector::positive() const
{
    return std::all_of(begin(), end(), [](const Integer& x) { return x >= 0; });
}

RootVector RootVector::from(const Content& b)
{
    std::vector<Rational> out;
    out.reserve(b.size());
    for (const auto& x : b)
        out.emplace_back(x);
    return RootVector(std::move(out));
}

RootVector RootVector::simple(std::size_t n, std::size_t i)
{
    RootVector r = zero(n);
    r[i] = 1;
    return r;
}

RootVector RootVector::delta(const CartanData& data)
{
    RootVector r = zero(data.size());
    for (std::size_t i = 0; i < data.size(); ++i)
        r[i] = data.mark(i);
    return r;
}

bool RootVector::integral() const
{
    return std::all_of(begin(), end(), [](const Rational& q) { return is_integral(q); });
}

Content RootVector::to_content() const
{
    std::vector<Integer> out;
    out.reserve(size());
    for (const auto& q : *this) {
        if (!is_integral(q))
            throw ConsistencyError("root vector has non-integral coefficient " + to_string(q));
        out.push_back(q.get_num());
    }
    return Content(std::move(out));
}

std::shared_ptr<const CartanData> make_cartan(const AffineType& type)
{
    return std::make_shared<const CartanData>(build_cartan(type));
}

HighestWeight::HighestWeight(std::shared_ptr<const CartanData> data, std::vector<Integer> labels)
    : data_(std::move(data))
    , labels_(std::move(labels))
{
    if (!data_)
        throw InvalidInput("highest weight without Cartan data");
    if (labels_.size() != data_->size())
        throw InvalidInput("expected " + std::to_string(data_->size()) + " labels for "
            + data_->type.name() + ", got " + std::to_string(labels_.size()));
    level_ = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] < 0)
            throw InvalidInput("highest weight labels must be non-negative");
        level_ += data_->comark(i) * labels_[i];
    }
    if (level_ <= 0)
        throw InvalidInput("highest weight must have positive level");
}

HighestWeight::HighestWeight(std::shared_ptr<const CartanData> data, std::initializer_list<long> labels)
    : HighestWeight(std::move(data), [&] {
        std::vector<Integer> v;
        for (long x : labels)
            v.emplace_back(x);
        return v;
    }())
{
}

HighestWeight HighestWeight::from_fundamental(std::shared_ptr<const CartanData> data,
    const std::vector<std::size_t>& nodes)
{
    std::vector<Integer> labels(data->size(), 0);
    for (std::size_t i : nodes) {
        if (i >= labels.size())
            throw InvalidInput("fundamental weight index out of range");
        ++labels[i];
    }
    return HighestWeight(std::move(data), std::move(labels));
}

HubVector content_to_hub(const HighestWeight& lambda, const Content& b)
{
    const auto& data = lambda.data();
    std::vector<Integer> theta = lambda.labels();
    for (std::size_t i = 0; i < theta.size(); ++i)
        for (std::size_t j = 0; j < theta.size(); ++j)
            if (data.a(i, j) != 0)
                theta[i] -= data.a(i, j) * b[j];
    return HubVector(std::move(theta));
}

Integer level(const CartanData& data, const HubVector& theta)
{
    Integer k = 0;
    for (std::size_t i = 0; i < theta.size(); ++i)
        k += data.comark(i) * theta[i];
    return k;
}

Rational bilinear(const HighestWeight& lambda, const RootVector& x)
{
    const auto& data = lambda.data();
    Rational sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        sum += x[i] * lambda.labels()[i] * data.ratio(i);
    return sum;
}

Rational bilinear_rr(const CartanData& data, const RootVector& x, const RootVector& y)
{
    Rational sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        Rational row = 0;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (data.a(i, j) != 0)
                row += y[j] * data.a(i, j);
        sum += x[i] * data.ratio(i) * row;
    }
    return sum;
}

Rational defect(const HighestWeight& lambda, const Content& b)
{
    const RootVector alpha = RootVector::from(b);
    return bilinear(lambda, alpha) - bilinear_rr(lambda.data(), alpha, alpha) / 2;
}

std::optional<Content> hub_to_content(const HighestWeight& lambda, const HubVector& theta)
{
    const auto& data = lambda.data();
    if (theta.size() != data.size())
        throw InvalidInput("hub has wrong length");
    if (level(data, theta) != lambda.level())
        throw LevelMismatch("hub level " + to_string(level(data, theta)) + " differs from level "
            + to_string(lambda.level()));
    std::vector<Integer> rhs(theta.size());
    for (std::size_t i = 0; i < rhs.size(); ++i)
        rhs[i] = lambda.labels()[i] - theta[i];
    const auto gamma = solve_integer(smith_normal_form(to_integer_matrix(data.matrix)), rhs);
    if (!gamma)
        return std::nullopt;
    return normalize_maximal(data, Content(*gamma));
}

Content normalize_maximal(const CartanData& data, const Content& gamma)
{
    Integer s = floor_div(gamma[0], data.mark(0));
    for (std::size_t i = 1; i < gamma.size(); ++i)
        s = std::min<Integer>(s, floor_div(gamma[i], data.mark(i)));
    return shift_by_delta(data, gamma, -s);
}

Content shift_by_delta(const CartanData& data, const Content& b, const Integer& s)
{
    Content out = b;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += s * data.mark(i);
    return out;
}

} // namespace affweights
