#include "plurikit/json_io.hpp"

namespace plurikit {

json to_json(const BigRational& q) { return q.str(); }

json to_json(const KappaRational& f) {
    json num = json::array();
    for (const auto& c : f.num().coeffs()) num.push_back(c.str());
    json den = json::array();
    for (const auto& c : f.den().coeffs()) den.push_back(c.str());
    return json{{"num", num}, {"den", den}};
}

json to_json(const Ambient& a) {
    json j{{"n", a.n}};
    j["kappa_cols"] = a.kappa_cols ? json(*a.kappa_cols) : json(nullptr);
    if (a.n1 || a.n2 || a.m) {
        j["n1"] = a.n1;
        j["n2"] = a.n2;
        j["m"] = a.m;
    }
    return j;
}

json to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::object();
        for (const auto& [v, e] : m.exps()) exps[v.json_key()] = e;
        terms.push_back(json{{"coeff", to_json(c)}, {"exps", exps}});
    }
    return json{{"ambient", to_json(p.ambient())}, {"terms", terms}};
}

BigRational rational_from_json(const json& j) {
    if (!j.is_string()) raise(ErrorCode::BadInput, "rational must be a string");
    return BigRational::from_string(j.get<std::string>());
}

KappaRational kappa_rational_from_json(const json& j) {
    auto read = [](const json& arr) {
        if (!arr.is_array()) raise(ErrorCode::BadInput, "coefficient list must be an array");
        std::vector<BigRational> c;
        for (const auto& e : arr) c.push_back(rational_from_json(e));
        return KappaPoly(std::move(c));
    };
    if (!j.contains("num") || !j.contains("den"))
        raise(ErrorCode::BadInput, "rational function needs num and den");
    return KappaRational(read(j["num"]), read(j["den"]));
}

Ambient ambient_from_json(const json& j) {
    Ambient a;
    a.n = j.value("n", 0);
    if (j.contains("kappa_cols") && !j["kappa_cols"].is_null())
        a.kappa_cols = j["kappa_cols"].get<int>();
    a.n1 = j.value("n1", 0);
    a.n2 = j.value("n2", 0);
    a.m = j.value("m", 0);
    return a;
}

VarId var_from_key(const std::string& key) {
    static const std::pair<const char*, VarFamily> tags[] = {
        {"u1", VarFamily::U1}, {"u2", VarFamily::U2},
        {"v1", VarFamily::V1}, {"v2", VarFamily::V2},
        {"t", VarFamily::T},   {"s", VarFamily::S},
        {"x", VarFamily::X},   {"w", VarFamily::W},
    };
    for (const auto& [tag, fam] : tags) {
        std::string t = tag;
        if (key.size() <= t.size() + 1 || key.compare(0, t.size(), t) != 0 ||
            key[t.size()] != '_')
            continue;
        std::string rest = key.substr(t.size() + 1);
        size_t sep = rest.find('_');
        try {
            if (fam == VarFamily::S) {
                if (sep != std::string::npos) break;
                return VarId::s(std::stoi(rest));
            }
            if (sep == std::string::npos) break;
            return VarId::make(fam, std::stoi(rest.substr(0, sep)),
                               std::stoi(rest.substr(sep + 1)));
        } catch (const std::invalid_argument&) {
            break;
        }
    }
    raise(ErrorCode::BadInput, "bad variable key: " + key);
}

Poly poly_from_json(const json& j) {
    if (!j.contains("ambient") || !j.contains("terms"))
        raise(ErrorCode::BadInput, "polynomial needs ambient and terms");
    Ambient amb = ambient_from_json(j["ambient"]);
    Poly p(amb);
    for (const auto& term : j["terms"]) {
        KappaRational c = kappa_rational_from_json(term.at("coeff"));
        std::vector<std::pair<VarId, uint32_t>> exps;
        for (const auto& [key, val] : term.at("exps").items()) {
            VarId v = var_from_key(key);
            amb.check_var(v);
            int e = val.get<int>();
            if (e < 0) raise(ErrorCode::BadInput, "negative exponent");
            exps.push_back({v, static_cast<uint32_t>(e)});
        }
        p.add_term(Monomial(std::move(exps)), c);
    }
    return p;
}

}  // namespace plurikit
