// boundring: compute the ring of polynomials bounded on a tentacle set, by
// the direct cone route and (for two variables) the toric completion route.

#include "boundring/boundedring.hpp"
#include "boundring/completion2d.hpp"
#include "boundring/dsl.hpp"
#include "boundring/oracle.hpp"
#include "boundring/report.hpp"
#include "boundring/setmodel.hpp"
#include "boundring/valuation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace boundring;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitContradiction = 3;

struct Options {
    std::string file;
    std::string polynomial;
    bool jsonOut = false;
    bool noCompletion = false;
    int degreeBound = 4;
    int oracleScales = 40;
    int expectVars = 0;  // 0 = no check
};

ParsedSetFile loadSpec(const Options& opt) {
    std::ifstream in(opt.file);
    if (!in) throw CLI::ValidationError("--file", "cannot open '" + opt.file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    ParsedSetFile parsed = parseSetFile(ss.str());
    if (opt.expectVars > 0 && parsed.spec.n != opt.expectVars)
        throw ParseError("expected " + std::to_string(opt.expectVars) + " variables, file has " +
                             std::to_string(parsed.spec.n),
                         0);
    return parsed;
}

void printDiagnostics(const DensityDiagnostics& d) {
    std::cout << "unbounded:                 " << (d.unbounded ? "yes" : "no") << "\n";
    std::cout << "zariski dense at infinity: " << (d.zariski_dense_at_infinity ? "yes" : "no")
              << "\n";
    std::cout << "conductor zero:            " << (d.conductor_zero ? "yes" : "no") << "\n";
    std::cout << "noetherian obstruction:    " << (d.noetherian_obstruction ? "yes" : "no")
              << "\n";
    for (const auto& m : d.messages) std::cout << "note: " << m << "\n";
}

json baseReport(const SetSpec& spec) {
    json j;
    j["spec"] = specToJson(spec);
    j["diagnostics"] = diagnosticsToJson(validate(spec));
    return j;
}

int cmdRing(const Options& opt) {
    ParsedSetFile parsed = loadSpec(opt);
    const SetSpec& spec = parsed.spec;
    BoundedMonoid m = boundedMonoid(spec);
    std::optional<CompletionReport> completion;
    if (spec.n == 2 && !opt.noCompletion) {
        completion = compatibleCompletion(spec);
        if (!(completion->ring.basis == m.basis)) {
            std::cerr << "internal error: completion route disagrees with the direct route\n";
            return kExitContradiction;
        }
    }
    if (opt.jsonOut) {
        json j = baseReport(spec);
        j.update(monoidToJson(m, spec.names()));
        if (completion) j["completion"] = completionToJson(*completion);
        std::cout << j.dump(2) << "\n";
    } else {
        auto gens = generatorStrings(m, spec.names());
        std::cout << "B(" << parsed.setName << ") = R[";
        for (std::size_t i = 0; i < gens.size(); ++i)
            std::cout << (i ? ", " : "") << gens[i];
        std::cout << "]\n";
        std::cout << "trdeg = " << m.trdeg << "\n";
    }
    return kExitOk;
}

int cmdMember(const Options& opt) {
    ParsedSetFile parsed = loadSpec(opt);
    const SetSpec& spec = parsed.spec;
    Polynomial f = parsePolynomial(opt.polynomial, spec.names());
    MembershipVerdict v = isBounded(f, spec);
    OracleParams params;
    params.scales = opt.oracleScales;
    json j = baseReport(spec);
    j["polynomial"] = format(f, spec.names());
    j["bounded"] = v.bounded;
    if (!v.bounded) {
        j["violating_exponent"] = exponentToJson(*v.violating_exponent);
        j["violating_direction"] = vecToJson(*v.violating_direction);
        GrowthVerdict g = certifyUnbounded(f, spec, v.violating_direction, params);
        j["oracle_certified"] = g.unbounded_certified;
    }
    if (opt.jsonOut) {
        std::cout << j.dump(2) << "\n";
    } else if (v.bounded) {
        std::cout << "bounded\n";
    } else {
        std::cout << "unbounded\n";
        std::cout << "violating exponent:  " << toString(toVecI(*v.violating_exponent)) << "\n";
        std::cout << "violating direction: " << toString(*v.violating_direction) << "\n";
        std::cout << "oracle certified:    " << (j["oracle_certified"].get<bool>() ? "yes" : "no")
                  << "\n";
    }
    return kExitOk;
}

int cmdTrdeg(const Options& opt) {
    ParsedSetFile parsed = loadSpec(opt);
    BoundedMonoid m = boundedMonoid(parsed.spec);
    if (opt.jsonOut) {
        json j = baseReport(parsed.spec);
        j["trdeg"] = m.trdeg;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "trdeg = " << m.trdeg << "\n";
    }
    return kExitOk;
}

int cmdCompletion(const Options& opt) {
    ParsedSetFile parsed = loadSpec(opt);
    CompletionReport rep = compatibleCompletion(parsed.spec);
    if (opt.jsonOut) {
        json j = baseReport(parsed.spec);
        j.update(monoidToJson(rep.ring, parsed.spec.names()));
        j["completion"] = completionToJson(rep);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "blow-ups:\n";
        for (const auto& b : rep.blowups)
            std::cout << "  " << b.label << " = " << toString(b.inserted_ray) << " from cone("
                      << toString(b.parent_cone.first) << ", " << toString(b.parent_cone.second)
                      << ")\n";
        std::cout << "touched:  ";
        for (const VecI& r : rep.touchedRays()) std::cout << toString(r) << " ";
        std::cout << "\nuntouched: ";
        for (const VecI& r : rep.untouchedInfinityRays()) std::cout << toString(r) << " ";
        std::cout << "\nM_D =\n";
        for (const auto& row : rep.m_d) {
            std::cout << "  [";
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? ", " : "") << row[i];
            std::cout << "]\n";
        }
        std::cout << "verdict: " << toString(rep.trdeg_verdict) << "\n";
        auto gens = generatorStrings(rep.ring, parsed.spec.names());
        std::cout << "ring generators: ";
        for (std::size_t i = 0; i < gens.size(); ++i) std::cout << (i ? ", " : "") << gens[i];
        std::cout << "\n";
    }
    return kExitOk;
}

int cmdWitness(const Options& opt) {
    ParsedSetFile parsed = loadSpec(opt);
    WitnessResult w = properWitness(parsed.spec);
    if (opt.jsonOut) {
        json j = baseReport(parsed.spec);
        j["witness"] = w.witness ? json(formatMonomial(*w.witness, parsed.spec.names())) : json();
        j["reason"] = w.reason;
        std::cout << j.dump(2) << "\n";
    } else if (w.witness) {
        std::cout << "witness: " << formatMonomial(*w.witness, parsed.spec.names()) << "\n";
    } else {
        std::cout << "none (" << w.reason << ")\n";
    }
    return kExitOk;
}

int cmdCheck(const Options& opt) {
    ParsedSetFile parsed = loadSpec(opt);
    const SetSpec& spec = parsed.spec;
    bool routesAgree = true;
    if (spec.n == 2 && !opt.noCompletion) {
        BoundedMonoid direct = boundedMonoid(spec);
        CompletionReport rep = compatibleCompletion(spec);
        routesAgree = direct.basis == rep.ring.basis;
    }
    OracleParams params;
    params.scales = opt.oracleScales;
    ConsistencyReport rep = consistencyCheck(spec, opt.degreeBound, params);
    if (opt.jsonOut) {
        json j = baseReport(spec);
        j["routes_agree"] = routesAgree;
        j["monomials_checked"] = rep.monomials_checked;
        j["disagreements"] = rep.disagreements;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "route equivalence: " << (routesAgree ? "ok" : "MISMATCH") << "\n";
        std::cout << "oracle consistency: " << rep.monomials_checked << " monomials, "
                  << rep.disagreements.size() << " disagreements\n";
        for (const auto& d : rep.disagreements) std::cout << "  " << d << "\n";
    }
    return (routesAgree && rep.disagreements.empty()) ? kExitOk : kExitContradiction;
}

int cmdDiagnose(const Options& opt) {
    ParsedSetFile parsed = loadSpec(opt);
    DensityDiagnostics d = validate(parsed.spec);
    if (opt.jsonOut) {
        json j;
        j["spec"] = specToJson(parsed.spec);
        j["diagnostics"] = diagnosticsToJson(d);
        std::cout << j.dump(2) << "\n";
    } else {
        printDiagnostics(d);
    }
    return d.ring_computable ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded polynomial rings on sets cut out by monomial inequalities"};
    app.require_subcommand(1);

    Options opt;
    auto addCommon = [&](CLI::App* sub) {
        sub->add_option("-f,--file", opt.file, "input .set file")->required();
        sub->add_flag("--json", opt.jsonOut, "machine-readable JSON output");
        sub->add_option("--degree-bound", opt.degreeBound, "monomial degree bound for check");
        sub->add_option("--oracle-scales", opt.oracleScales, "number of scale doublings");
        sub->add_flag("--no-completion", opt.noCompletion, "direct route only");
        sub->add_option("--n", opt.expectVars, "expected number of variables");
    };

    CLI::App* ring = app.add_subcommand("ring", "compute the generators of B(S)");
    addCommon(ring);
    CLI::App* member = app.add_subcommand("member", "decide whether a polynomial is bounded on S");
    addCommon(member);
    member->add_option("polynomial", opt.polynomial, "polynomial expression")->required();
    CLI::App* trdeg = app.add_subcommand("trdeg", "transcendence degree of B(S)");
    addCommon(trdeg);
    CLI::App* completion = app.add_subcommand("completion", "S-compatible toric completion (n = 2)");
    addCommon(completion);
    CLI::App* witness = app.add_subcommand("witness", "proper-function witness");
    addCommon(witness);
    CLI::App* check = app.add_subcommand("check", "cross-validate the routes and the oracle");
    addCommon(check);
    CLI::App* diagnose = app.add_subcommand("diagnose", "density / noetherianity diagnostics");
    addCommon(diagnose);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : kExitOk;
    }

    try {
        if (ring->parsed()) return cmdRing(opt);
        if (member->parsed()) return cmdMember(opt);
        if (trdeg->parsed()) return cmdTrdeg(opt);
        if (completion->parsed()) return cmdCompletion(opt);
        if (witness->parsed()) return cmdWitness(opt);
        if (check->parsed()) return cmdCheck(opt);
        if (diagnose->parsed()) return cmdDiagnose(opt);
    } catch (const boundring::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const boundring::ValidationError& e) {
        std::cerr << "validation failed:\n";
        for (const auto& m : e.diagnostics.messages) std::cerr << "  " << m << "\n";
        return kExitValidation;
    } catch (const boundring::EngineContradiction& e) {
        std::cerr << "internal cross-check contradiction: " << e.what() << "\n";
        return kExitContradiction;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
