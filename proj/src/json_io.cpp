#include "qdt/json_io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace qdt {

namespace {

std::string exponent_text(long k, Notation notation) {
    if (notation == Notation::U) return k == 1 ? "u" : "u^" + std::to_string(k);
    if (k % 2 != 0) return "q^" + std::to_string(k) + "/2";
    return k == 2 ? "q" : "q^" + std::to_string(k / 2);
}

// sum_i c[i] x^{offset+i}
std::string terms_to_string(const Poly& p, long offset, Notation notation) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) continue;
        const long k = offset + static_cast<long>(i);
        const mpz_class a = abs(cs[i]);
        if (first) os << (cs[i] < 0 ? "-" : "");
        else os << (cs[i] < 0 ? " - " : " + ");
        if (k == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << exponent_text(k, notation);
        }
        first = false;
    }
    return os.str();
}

Json coeff_to_json(const mpz_class& c) {
    if (c.fits_slong_p()) return Json(c.get_si());
    return Json(c.get_str());
}

mpz_class coeff_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) {
        mpz_class v;
        if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("QRat JSON: bad integer string");
        return v;
    }
    throw std::invalid_argument("QRat JSON: coefficients must be integers or integer strings");
}

Json side_to_json(const Poly& p, long offset) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(coeff_to_json(c));
    Json j;
    j["offset"] = offset;
    j["coeffs"] = std::move(coeffs);
    return j;
}

// Returns the polynomial and its offset.
std::pair<Poly, long> side_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
        throw std::invalid_argument("QRat JSON: expected {\"offset\": v, \"coeffs\": [...]}");
    long offset = 0;
    if (j.contains("offset")) {
        if (!j.at("offset").is_number_integer()) throw std::invalid_argument("QRat JSON: offset must be an integer");
        offset = j.at("offset").get<long>();
    }
    std::vector<mpz_class> cs;
    for (const auto& c : j.at("coeffs")) cs.push_back(coeff_from_json(c));
    return {Poly(std::move(cs)), offset};
}

Json dim_to_json(const DimVector& d) { return Json(d.v); }

}  // namespace

std::string laurent_to_string(const QRat& r, Notation notation) {
    if (!r.is_laurent_polynomial()) throw std::invalid_argument("laurent_to_string: not a Laurent polynomial");
    return terms_to_string(r.reduced_num(), r.shift(), notation);
}

std::string qrat_to_string(const QRat& r, Notation notation) {
    if (r.is_laurent_polynomial()) return laurent_to_string(r, notation);
    return "(" + terms_to_string(r.reduced_num(), r.shift(), notation) + ")/(" +
           terms_to_string(r.reduced_den(), 0, notation) + ")";
}

Json qrat_to_json(const QRat& r) {
    Json j;
    j["num"] = side_to_json(r.reduced_num(), r.shift());
    j["den"] = side_to_json(r.reduced_den(), 0);
    return j;
}

QRat qrat_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("QRat JSON: expected an object with \"num\" and \"den\"");
    auto [num, on] = side_from_json(j.at("num"));
    auto [den, od] = side_from_json(j.at("den"));
    if (den.is_zero()) throw std::invalid_argument("QRat JSON: zero denominator");
    return QRat(on - od, std::move(num), std::move(den));
}

std::string dim_to_key(const DimVector& d) { return d.to_string(); }

Json mseries_to_json(const MSeries& s, Notation notation) {
    Json out = Json::array();
    for (const auto& [d, c] : s.terms()) {
        Json e;
        e["d"] = dim_to_json(d);
        e["value"] = qrat_to_json(c);
        e["text"] = qrat_to_string(c, notation);
        out.push_back(std::move(e));
    }
    return out;
}

Json dt_result_to_json(const DTResult& r) {
    Json out = Json::array();
    for (const auto& e : r.entries) {
        Json j;
        j["d"] = dim_to_json(e.d);
        j["dt"] = qrat_to_json(e.dt);
        j["dt_u"] = laurent_to_string(e.dt, Notation::U);
        j["dt_q"] = laurent_to_string(e.dt, Notation::Q);
        Json ker = Json::object();
        for (const auto& [n, c] : e.ker_dims) ker[std::to_string(n)] = coeff_to_json(c);
        j["ker_dims"] = std::move(ker);
        j["parity"] = e.parity;
        out.push_back(std::move(j));
    }
    return out;
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["ok"] = v.ok;
    if (!v.ok) {
        j["message"] = v.message;
        if (v.d) j["d"] = dim_to_json(*v.d);
        if (v.degree) j["degree"] = *v.degree;
    }
    return j;
}

}  // namespace qdt
