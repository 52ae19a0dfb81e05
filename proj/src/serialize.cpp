#include "affweights/serialize.hpp"

#include "affweights/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace affweights {

Json to_json(const Integer& x)
{
    if (x.fits_slong_p())
        return Json(x.get_si());
    return Json(x.get_str());
}

Json to_json(const Rational& q)
{
    Json j;
    j["num"] = to_json(Integer(q.get_num()));
    j["den"] = to_json(Integer(q.get_den()));
    return j;
}

Json to_json(const std::vector<Integer>& xs)
{
    Json j = Json::array();
    for (const auto& x : xs)
        j.push_back(to_json(x));
    return j;
}

Json to_json(const Content& b) { return to_json(b.values()); }

Json to_json(const HubVector& theta) { return to_json(theta.values()); }

Json to_json(const RootVector& x)
{
    Json j = Json::array();
    for (const auto& q : x)
        j.push_back(to_json(q));
    return j;
}

Json to_json(const ReflectionWord& word)
{
    Json j = Json::array();
    for (auto i : word)
        j.push_back(i);
    return j;
}

Json to_json(const MembershipCertificate& cert)
{
    Json j;
    j["content"] = to_json(cert.query);
    j["etaTilde"] = to_json(cert.key);
    j["representative"] = to_json(cert.representative);
    j["difference"] = to_json(cert.difference);
    j["alpha"] = to_json(cert.alpha);
    j["zetaAlpha"] = to_json(cert.zeta_alpha);
    j["alphaAlpha"] = to_json(cert.alpha_alpha);
    j["shift"] = to_json(cert.shift);
    j["defect"] = to_json(cert.defect);
    j["verdict"] = cert.verdict;
    return j;
}

Json to_json(const StringProfile& profile)
{
    Json j;
    j["root"] = to_json(profile.root);
    Json weights = Json::array();
    for (const auto& b : profile.weights)
        weights.push_back(to_json(b));
    j["weights"] = std::move(weights);
    j["shifts"] = to_json(profile.shifts);
    j["palindromic"] = is_palindromic(profile.shifts);
    j["unimodal"] = is_unimodal_with_plateau(profile.shifts);
    return j;
}

Json to_json(const NbarTable& table)
{
    Json j;
    j["type"] = table.data().type.name();
    j["lambda"] = to_json(table.lambda().labels());
    j["k"] = to_json(table.level());
    Json entries = Json::array();
    for (const auto& [key, entry] : table.entries()) {
        Json e;
        e["etaTilde"] = to_json(key);
        e["content"] = to_json(entry.content);
        e["hub"] = to_json(entry.hub);
        e["defect"] = to_json(entry.defect);
        e["orbit"] = entry.orbit;
        Json members = Json::array();
        for (const auto& b : entry.t_class)
            members.push_back(to_json(b));
        e["tClass"] = std::move(members);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<long>());
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw InvalidInput("expected an integer in JSON input");
}

Rational rational_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw InvalidInput("expected {\"num\": ..., \"den\": ...}");
    const Integer den = integer_from_json(j.at("den"));
    if (den == 0)
        throw InvalidInput("zero denominator");
    return make_rational(integer_from_json(j.at("num")), den);
}

std::string format_content(const Content& b) { return "(" + join(b.values()) + ")"; }

std::string format_hub(const HubVector& theta) { return "[" + join(theta.values()) + "]"; }

std::string format_root(const RootVector& x)
{
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        const Rational mag = abs(x[i]);
        if (out.empty())
            out += x[i] < 0 ? "-" : "";
        else
            out += x[i] < 0 ? " - " : " + ";
        if (mag != 1)
            out += to_string(mag) + " ";
        out += "alpha_" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

void print_nbar_table(std::ostream& out, const NbarTable& table)
{
    const auto& lambda = table.lambda();
    const auto l = static_cast<std::size_t>(table.data().rank());

    std::vector<std::string> header {"orbit", "content", "hub"};
    for (std::size_t i = 1; i <= l; ++i)
        header.push_back("s" + std::to_string(i));
    header.insert(header.end(), {"defect", "etaTilde", ""});

    std::vector<std::vector<std::string>> rows;
    for (const auto& e : table.elements()) {
        std::vector<std::string> row {std::to_string(e.orbit), format_content(e.content), format_hub(e.hub)};
        for (std::size_t i = 1; i <= l; ++i)
            row.push_back(format_content(reflect(lambda, e.content, i)));
        row.push_back(to_string(e.defect));
        row.push_back("(" + join(e.eta) + ")");
        row.push_back(table.is_representative(e.content) ? "*" : "");
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> width(header.size(), 0);
    auto measure = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    };
    measure(header);
    for (const auto& row : rows)
        measure(row);
    auto print = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
            if (c + 1 < row.size())
                out << "  ";
        }
        out << '\n';
    };
    print(header);
    std::size_t previous = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0 && table.elements()[r].orbit != previous)
            out << '\n';
        previous = table.elements()[r].orbit;
        print(rows[r]);
    }
}

} // namespace affweights
