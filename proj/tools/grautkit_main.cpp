#include <CLI11.hpp>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "grautkit/expr.hpp"
#include "grautkit/gens.hpp"
#include "grautkit/genword_json.hpp"
#include "grautkit/grading.hpp"
#include "grautkit/lift.hpp"

namespace {

using namespace grautkit;

bool color_enabled() {
    const char* env = std::getenv("GRAUTKIT_COLOR");
    if (env != nullptr && std::string(env) == "0") return false;
    return isatty(2) != 0;
}

void print_error(const std::string& message) {
    if (color_enabled())
        std::cerr << "\x1b[31merror:\x1b[0m " << message << "\n";
    else
        std::cerr << "error: " << message << "\n";
}

/// --map accepts either a file name or inline map text.
std::string read_map_argument(const std::string& value) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(value, ec)) {
        std::ifstream in(value);
        if (!in) throw UsageError("cannot read map file: " + value);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    return value;
}

PolyMap load_map(const std::string& value) { return parse_map(read_map_argument(value)); }

std::string describe_permutation(const NormalizedGrading& g) {
    const char* names = "xyz";
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (i) out += ",";
        out += names[i];
        out += "->";
        out += names[g.applied_permutation[static_cast<std::size_t>(i)]];
    }
    return out;
}

void echo_bookkeeping(const NormalizedGrading& g) {
    if (g.trivial_bookkeeping()) return;
    std::cout << "bookkeeping: sign=" << (g.applied_sign > 0 ? "+1" : "-1")
              << " scale=" << g.applied_scale
              << " permutation=" << describe_permutation(g) << "\n";
}

/// Renames the variables of a 3-map so that a map graded in the user's
/// variable order becomes graded in the normalized order.
PolyMap to_normalized_coordinates(const PolyMap& phi, const NormalizedGrading& g) {
    if (g.applied_permutation == std::array<int, 3>{0, 1, 2}) return phi;
    auto rename = [&](const Poly& p) {
        Poly out(3);
        for (const auto& [m, c] : p.terms()) {
            Monomial r(3);
            for (int var = 0; var < 3; ++var)
                r = r.with_exponent(g.applied_permutation[static_cast<std::size_t>(var)],
                                    m.exponent(var));
            out.add_term(r, c);
        }
        return out;
    };
    std::vector<Poly> images(3, Poly::zero(3));
    for (int var = 0; var < 3; ++var)
        images[static_cast<std::size_t>(g.applied_permutation[static_cast<std::size_t>(var)])] =
            rename(phi.image(var));
    return PolyMap(std::move(images));
}

void print_word_human(const GenWord& word) {
    std::cout << "grading: " << grading_to_text(word.grading()) << "\n";
    if (word.factors().empty()) {
        std::cout << "word: identity (empty)\n";
        return;
    }
    std::cout << "word (" << word.factors().size() << " factors, outermost first):\n";
    for (const GenFactor& factor : word.factors()) {
        std::visit(
            [&](const auto& f) {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, TorusFactor>) {
                    std::cout << "  T lambda=" << f.lambda << "\n";
                } else if constexpr (std::is_same_v<T, UElement>) {
                    std::cout << "  U lambda=" << f.lambda() << " f=" << format(f.f()) << "\n";
                } else {
                    std::cout << "  S tau=(lambda=" << f.tau().lambda()
                              << " f=" << format(f.tau().f()) << ")"
                              << " theta=(lambda=" << f.theta().lambda()
                              << " mu=" << f.theta().mu() << " k=" << f.theta().k() << ")"
                              << " s=(lambda=" << f.s().lambda() << " f=" << format(f.s().f())
                              << ")\n";
                }
            },
            factor);
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact toolkit for graded polynomial automorphisms of K[x,y,z]"};
    app.require_subcommand(1);

    std::string grading_text;
    std::string map_text;
    std::vector<std::string> map_args;
    std::string word_file;
    bool as_json = false;

    auto add_grading = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--grading", grading_text,
                                    "grading as three space-separated integers, e.g. \"3 1 -1\"");
        if (required) opt->required();
    };
    auto add_map = [&](CLI::App* cmd) {
        cmd->add_option("--map", map_text, "map file or inline text, components separated by ';'")
            ->required();
    };

    auto* cmd_classify = app.add_subcommand("classify", "classify a raw grading");
    add_grading(cmd_classify);

    auto* cmd_wild = app.add_subcommand("admits-wild",
                                        "decide whether the grading admits graded wild automorphisms");
    add_grading(cmd_wild);

    auto* cmd_check = app.add_subcommand("check-graded", "check a map against a raw grading");
    add_grading(cmd_check);
    add_map(cmd_check);

    auto* cmd_restrict = app.add_subcommand("restrict", "restrict a graded z-fixing map to the plane z=1");
    add_grading(cmd_restrict);
    add_map(cmd_restrict);

    auto* cmd_lift = app.add_subcommand("lift", "lift a graded plane map to a space map");
    add_grading(cmd_lift);
    add_map(cmd_lift);

    auto* cmd_split = app.add_subcommand("split-torus", "factor a graded map as E member times torus");
    add_grading(cmd_split);
    add_map(cmd_split);

    auto* cmd_compose = app.add_subcommand("compose", "compose two maps (first argument outermost)");
    cmd_compose->add_option("--map", map_args, "map file or inline text; give exactly twice")
        ->required()
        ->expected(2);

    auto* cmd_decompose = app.add_subcommand("decompose",
                                             "decompose a graded automorphism into generators");
    add_grading(cmd_decompose);
    add_map(cmd_decompose);
    cmd_decompose->add_flag("--json", as_json, "emit the generator word as JSON");

    auto* cmd_recompose = app.add_subcommand("recompose", "recompose a generator-word JSON document");
    cmd_recompose->add_option("--word", word_file, "JSON file (default: standard input)");

    auto* cmd_nagata = app.add_subcommand("nagata", "run the Nagata pipeline under grading (3,1,-1)");
    cmd_nagata->add_flag("--json", as_json, "emit results as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::ostringstream msg;
        msg << e.what();
        print_error(msg.str());
        return 2;
    }

    try {
        if (cmd_classify->parsed()) {
            RawGrading raw = parse_raw_grading(grading_text);
            GradingClass klass = classify(raw);
            std::cout << "classification: " << to_string(klass) << "\n";
            if (klass == GradingClass::Mixed) {
                NormalizedGrading g = normalize(raw);
                std::cout << "normalized: " << grading_to_text(g) << "\n";
                echo_bookkeeping(g);
            }
            return 0;
        }
        if (cmd_wild->parsed()) {
            RawGrading raw = parse_raw_grading(grading_text);
            GradingClass klass = classify(raw);
            if (klass != GradingClass::Mixed) {
                std::cout << "not wild-admitting: grading is " << to_string(klass) << "\n";
                return 0;
            }
            NormalizedGrading g = normalize(raw);
            if (auto cert = admits_wild(g))
                std::cout << "wild-admitting: P=" << cert->p << " Q=" << cert->q << "\n";
            else
                std::cout << "not wild-admitting\n";
            echo_bookkeeping(g);
            return 0;
        }
        if (cmd_check->parsed()) {
            RawGrading raw = parse_raw_grading(grading_text);
            PolyMap phi = load_map(map_text);
            if (phi.arity() != 3)
                throw UsageError("check-graded expects a 3-component map; gradings live on x,y,z");
            std::vector<long> weights(raw.degrees.begin(), raw.degrees.end());
            std::cout << (is_graded(phi, WeightVector(weights)) ? "graded" : "not graded") << "\n";
            return 0;
        }
        if (cmd_restrict->parsed()) {
            NormalizedGrading g = normalize(parse_raw_grading(grading_text));
            PolyMap phi = to_normalized_coordinates(load_map(map_text), g);
            EMember e(phi, g);
            std::cout << format(restrict_to_plane(e)) << "\n";
            echo_bookkeeping(g);
            return 0;
        }
        if (cmd_lift->parsed()) {
            NormalizedGrading g = normalize(parse_raw_grading(grading_text));
            PolyMap plane = load_map(map_text);
            if (plane.arity() != 2) throw UsageError("lift expects a 2-component plane map");
            std::cout << format(lift(plane, g).map()) << "\n";
            echo_bookkeeping(g);
            return 0;
        }
        if (cmd_split->parsed()) {
            NormalizedGrading g = normalize(parse_raw_grading(grading_text));
            PolyMap phi = to_normalized_coordinates(load_map(map_text), g);
            auto [e, torus] = split_torus(phi, g);
            std::cout << "e-member: " << format(e.map()) << "\n";
            std::cout << "lambda: " << torus.lambda << "\n";
            echo_bookkeeping(g);
            return 0;
        }
        if (cmd_compose->parsed()) {
            PolyMap outer = load_map(map_args[0]);
            PolyMap inner = load_map(map_args[1]);
            std::cout << format(compose(outer, inner)) << "\n";
            return 0;
        }
        if (cmd_decompose->parsed()) {
            NormalizedGrading g = normalize(parse_raw_grading(grading_text));
            PolyMap phi = to_normalized_coordinates(load_map(map_text), g);
            GenWord word = decompose_graded(phi, g);
            if (as_json)
                std::cout << genword_document(word).dump(2) << "\n";
            else
                print_word_human(word);
            return 0;
        }
        if (cmd_recompose->parsed()) {
            std::string text;
            if (word_file.empty()) {
                std::ostringstream buffer;
                buffer << std::cin.rdbuf();
                text = buffer.str();
            } else {
                std::ifstream in(word_file);
                if (!in) throw UsageError("cannot read word file: " + word_file);
                std::ostringstream buffer;
                buffer << in.rdbuf();
                text = buffer.str();
            }
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(text);
            } catch (const nlohmann::json::exception& e) {
                throw UsageError(std::string("malformed JSON: ") + e.what());
            }
            GenWord word = genword_from_document(doc);
            std::cout << format(recompose(word)) << "\n";
            return 0;
        }
        if (cmd_nagata->parsed()) {
            NormalizedGrading g = normalize(RawGrading{{3, 1, -1}});
            PolyMap tau = parse_map("u + v^2; v");
            PolyMap theta = parse_map("u; v + u");
            PolyMap tau_inverse = parse_map("u - v^2; v");
            PolyMap plane = compose(compose(tau_inverse, theta), tau);
            EMember sigma = lift(plane, g);
            GenWord word = decompose_graded(sigma.map(), g);
            if (as_json) {
                nlohmann::json doc = genword_document(word);
                doc["sigma"] = format(sigma.map());
                doc["restriction"] = format(plane);
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "sigma: " << format(sigma.map()) << "\n";
                std::cout << "restriction: " << format(plane) << "\n";
                print_word_human(word);
            }
            return 0;
        }
        throw UsageError("no subcommand selected");
    } catch (const DomainError& e) {
        print_error(e.what());
        return 1;
    } catch (const ParseError& e) {
        print_error(std::string(e.what()) + " (at bytes " + std::to_string(e.span().begin) +
                    ".." + std::to_string(e.span().end) + ")");
        return 2;
    } catch (const UsageError& e) {
        print_error(e.what());
        return 2;
    } catch (const InternalError& e) {
        print_error(std::string("internal error: ") + e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error(std::string("internal error: ") + e.what());
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
