#pragma once

// Machine-readable JSON reports. The emitted "spec" section round-trips
// through specFromJson back to the same SetSpec.

#include "boundring/boundedring.hpp"
#include "boundring/completion2d.hpp"
#include "boundring/oracle.hpp"
#include "boundring/setmodel.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace boundring {

using json = nlohmann::json;

inline json vecToJson(const VecI& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(static_cast<long long>(x));
    return a;
}

inline json exponentToJson(const Exponent& e) {
    json a = json::array();
    for (long long x : e) a.push_back(x);
    return a;
}

inline json specToJson(const SetSpec& s) {
    json j;
    j["vars"] = s.varNames;
    json tents = json::array();
    for (const Tentacle& t : s.tentacles) {
        json cons = json::array();
        for (const auto& c : t.constraints) {
            json jc;
            jc["alpha"] = exponentToJson(c.alpha);
            jc["beta"] = exponentToJson(c.beta);
            jc["bound"] = formatRat(c.bound);
            cons.push_back(std::move(jc));
        }
        json jt;
        jt["constraints"] = std::move(cons);
        jt["sign_regime"] = t.regime == SignRegime::absolute ? "absolute" : "positive-orthant";
        tents.push_back(std::move(jt));
    }
    j["tentacles"] = std::move(tents);
    return j;
}

inline Rat ratFromString(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline SetSpec specFromJson(const json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    int n = static_cast<int>(vars.size());
    std::vector<Tentacle> tents;
    for (const auto& jt : j.at("tentacles")) {
        Tentacle t;
        t.n = n;
        t.regime = jt.at("sign_regime") == "absolute" ? SignRegime::absolute
                                                      : SignRegime::positive_orthant;
        for (const auto& jc : jt.at("constraints")) {
            MonomialConstraint c;
            c.alpha = jc.at("alpha").get<Exponent>();
            c.beta = jc.at("beta").get<Exponent>();
            c.bound = ratFromString(jc.at("bound").get<std::string>());
            t.constraints.push_back(std::move(c));
        }
        tents.push_back(std::move(t));
    }
    return makeSetSpec(n, std::move(tents), std::move(vars));
}

inline json diagnosticsToJson(const DensityDiagnostics& d) {
    json j;
    j["zariski_dense_at_infinity"] = d.zariski_dense_at_infinity;
    j["unbounded"] = d.unbounded;
    j["conductor_zero"] = d.conductor_zero;
    j["noetherian_obstruction"] = d.noetherian_obstruction;
    j["ring_computable"] = d.ring_computable;
    j["messages"] = d.messages;
    return j;
}

inline json monoidToJson(const BoundedMonoid& m, const std::vector<std::string>& vars) {
    json j;
    j["generators"] = generatorStrings(m, vars);
    json basis = json::array();
    for (const auto& e : m.basis.elements) basis.push_back(exponentToJson(e));
    j["hilbert_basis"] = std::move(basis);
    j["trdeg"] = m.trdeg;
    return j;
}

inline json completionToJson(const CompletionReport& rep) {
    json j;
    json rays = json::array();
    for (const VecI& r : rep.fan.rays) rays.push_back(vecToJson(r));
    j["rays"] = std::move(rays);
    json blowups = json::array();
    for (const auto& b : rep.blowups) {
        json jb;
        jb["label"] = b.label;
        jb["inserted_ray"] = vecToJson(b.inserted_ray);
        jb["parent_cone"] = json::array({vecToJson(b.parent_cone.first),
                                         vecToJson(b.parent_cone.second)});
        blowups.push_back(std::move(jb));
    }
    j["blowups"] = std::move(blowups);
    json touched = json::array();
    for (const VecI& r : rep.touchedRays()) touched.push_back(vecToJson(r));
    j["touched"] = std::move(touched);
    json untouched = json::array();
    for (const VecI& r : rep.untouchedInfinityRays()) untouched.push_back(vecToJson(r));
    j["untouched"] = std::move(untouched);
    json divisors = json::array();
    for (const auto& d : rep.divisors) {
        json jd;
        jd["ray"] = vecToJson(d.ray);
        jd["label"] = d.label;
        jd["at_infinity"] = d.at_infinity;
        jd["touched"] = d.touched;
        jd["self_intersection"] = static_cast<long long>(d.self_intersection);
        divisors.push_back(std::move(jd));
    }
    j["divisors"] = std::move(divisors);
    json md = json::array();
    for (const auto& row : rep.m_d) {
        json jr = json::array();
        for (const Int& x : row) jr.push_back(static_cast<long long>(x));
        md.push_back(std::move(jr));
    }
    j["m_d"] = std::move(md);
    j["verdict"] = toString(rep.trdeg_verdict);
    return j;
}

}  // namespace boundring
