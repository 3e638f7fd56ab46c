#include "cotanhom/commands.hpp"

#include "cotanhom/errors.hpp"
#include "cotanhom/io.hpp"

#include <sstream>
#include <string_view>
#include <variant>

namespace cotanhom::commands {

namespace {

constexpr std::string_view kBuiltinPrefix = "builtin:";

bool is_builtin(const std::string& source) { return source.rfind(kBuiltinPrefix, 0) == 0; }
std::string builtin_name(const std::string& source) { return source.substr(kBuiltinPrefix.size()); }

using ComplexInput = std::variant<CellComplex, CochainComplex>;

ComplexInput load_complex(const std::string& source) {
    if (is_builtin(source)) return builtin_cell_complex(builtin_name(source));
    const auto j = io::read_json_file(source);
    if (j.is_object() && j.contains("cells")) return io::parse_cell_complex(j);
    if (j.is_object() && j.contains("dims")) return io::parse_complex(j);
    throw InputError("'" + source + "' is neither a cell complex nor a cochain complex");
}

Representation load_representation(const std::string& source) {
    if (is_builtin(source)) return builtin_representation(builtin_name(source));
    return io::parse_representation(io::read_json_file(source));
}

std::string dump(const io::json& j) { return j.dump(2) + "\n"; }

/// Runs `body`, mapping library errors onto exit codes.
template <typename Body>
CommandOutcome guarded(Body&& body) {
    try {
        return body();
    } catch (const ClassificationError& e) {
        return {kFailure, "", std::string("not classifiable: ") + e.what() + "\n"};
    } catch (const UnsupportedDifferentialError& e) {
        return {kFailure, "", std::string(e.what()) + "\n"};
    } catch (const Error& e) {
        return {kInputError, "", std::string("input error: ") + e.what() + "\n"};
    } catch (const nlohmann::json::exception& e) {
        return {kInputError, "", std::string("input error: ") + e.what() + "\n"};
    }
}

}  // namespace

CommandOutcome homology(const std::string& source, bool json) {
    return guarded([&]() -> CommandOutcome {
        const auto input = load_complex(source);
        const bool cellular = std::holds_alternative<CellComplex>(input);
        const CochainComplex complex =
            cellular ? chain_complex_of(std::get<CellComplex>(input)) : std::get<CochainComplex>(input);
        const auto h = cohomology(complex);
        const auto chi_dims = euler_from_dims(complex);
        const auto chi_h = euler_characteristic(h);

        CommandOutcome out;
        if (chi_dims != chi_h) {
            out.exit_code = kFailure;
            out.error = "Euler characteristics disagree: " + std::to_string(chi_dims) + " from dimensions, " +
                        std::to_string(chi_h) + " from cohomology\n";
        }

        // Cellular input is reported in lower (geometric) indices.
        const auto reported = cellular ? to_lower_index(h) : h;
        int lo = 0;
        int hi = 0;
        if (const auto support = complex.space().support()) {
            lo = cellular ? -support->second : support->first;
            hi = cellular ? -support->first : support->second;
        }
        if (cellular) lo = std::min(lo, 0);

        if (json) {
            out.output = dump({{"grading", cellular ? "homology" : "cohomology"},
                               {"dims", io::to_json(reported)},
                               {"euler", {{"from_dims", chi_dims}, {"from_homology", chi_h}}}});
            return out;
        }
        std::ostringstream os;
        for (int i = lo; i <= hi; ++i) os << (cellular ? "H" : "H^") << i << '=' << reported.dim(i) << ' ';
        os << "chi=" << chi_dims << '\n';
        out.output = os.str();
        return out;
    });
}

CommandOutcome classify(const std::string& source, bool json) {
    return guarded([&]() -> CommandOutcome {
        const auto input = load_complex(source);
        if (!std::holds_alternative<CellComplex>(input))
            throw InputError("classify needs a cell complex");
        const auto verdict = classify_surface(std::get<CellComplex>(input));
        if (json)
            return {kSuccess,
                    dump({{"genus", verdict.genus},
                          {"euler", verdict.euler},
                          {"connected", verdict.connected},
                          {"orientable_assumed", verdict.orientable_assumed}}),
                    ""};
        return {kSuccess, "genus=" + std::to_string(verdict.genus) + " chi=" + std::to_string(verdict.euler) + "\n",
                ""};
    });
}

CommandOutcome floer(const std::string& first, const std::string& second, bool json) {
    return guarded([&]() -> CommandOutcome {
        const auto v = load_representation(first);
        const auto w = load_representation(second);
        for (const auto* r : {&v, &w})
            if (const auto bad = first_violation(*r)) throw ValidationError("invalid representation: " + *bad);

        const auto hom = hom_complex(v, w);
        const auto chi = euler_from_dims(hom.space);
        if (!hom.differential_defined()) {
            if (json) return {kSuccess, dump({{"euler", chi}, {"differential_defined", false}}), ""};
            return {kSuccess, "chi=" + std::to_string(chi) + " (differential not defined by theorem hypothesis)\n", ""};
        }
        const auto hf = cohomology(*hom.complex);
        if (json)
            return {kSuccess, dump({{"floer", io::to_json(hf)}, {"euler", chi}, {"differential_defined", true}}), ""};

        std::ostringstream os;
        if (const auto support = hom.space.support())
            for (int i = support->first; i <= support->second; ++i) os << "HF" << i << '=' << hf.dim(i) << ' ';
        os << "chi=" << chi << '\n';
        return {kSuccess, os.str(), ""};
    });
}

CommandOutcome verify(const VerifyOptions& options) {
    return guarded([&]() -> CommandOutcome {
        SampleConfig cfg;
        cfg.seed = options.seed;
        cfg.count = options.count;
        cfg.max_total_dim = options.max_dim;
        cfg.check();

        TheoremReport report;
        if (options.theorem == "sphere")
            report = check_sphere_theorem(cfg, options.threads);
        else if (options.theorem == "torus")
            report = check_torus_theorem(cfg, options.threads);
        else if (options.theorem == "concentrated")
            report = check_concentrated_lemma(cfg, options.threads);
        else
            throw InputError("unknown theorem '" + options.theorem + "' (expected sphere, torus or concentrated)");

        const int code = report.passed() ? kSuccess : kFailure;
        return {code, options.json ? dump(io::to_json(report)) : report.to_text(), ""};
    });
}

}  // namespace cotanhom::commands
