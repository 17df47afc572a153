#include "grautkit/genword_json.hpp"

#include "grautkit/expr.hpp"

namespace grautkit {

namespace {

using nlohmann::json;

json w_like_to_json(const Rational& lambda, const Poly& f) {
    return json{{"lambda", lambda.str()}, {"f", format(f)}};
}

Rational rational_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw UsageError(std::string("expected string field \"") + key + "\" in generator word");
    return Rational::from_string(j[key].get<std::string>());
}

Poly shift_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw UsageError(std::string("expected string field \"") + key + "\" in generator word");
    return parse_poly(j[key].get<std::string>(), VarSet::Plane);
}

}  // namespace

json word_to_json(const GenWord& word) {
    json factors = json::array();
    for (const GenFactor& factor : word.factors()) {
        std::visit(
            [&](const auto& f) {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, TorusFactor>) {
                    factors.push_back(json{{"type", "T"}, {"lambda", f.lambda.str()}});
                } else if constexpr (std::is_same_v<T, UElement>) {
                    json u = w_like_to_json(f.lambda(), f.f());
                    u["type"] = "U";
                    factors.push_back(std::move(u));
                } else {
                    factors.push_back(json{
                        {"type", "S"},
                        {"tau", w_like_to_json(f.tau().lambda(), f.tau().f())},
                        {"theta", json{{"lambda", f.theta().lambda().str()},
                                       {"mu", f.theta().mu().str()},
                                       {"k", f.theta().k()}}},
                        {"s", w_like_to_json(f.s().lambda(), f.s().f())}});
                }
            },
            factor);
    }
    return factors;
}

json genword_document(const GenWord& word) {
    const NormalizedGrading& g = word.grading();
    json grading{{"a", g.a}, {"b", g.b}, {"c", g.c},
                 {"applied_sign", g.applied_sign},
                 {"applied_permutation", g.applied_permutation},
                 {"applied_scale", g.applied_scale}};
    return json{{"grading", std::move(grading)}, {"word", word_to_json(word)}};
}

GenWord genword_from_document(const json& doc) {
    if (!doc.is_object() || !doc.contains("grading") || !doc.contains("word"))
        throw UsageError("generator word document needs \"grading\" and \"word\"");
    const json& jg = doc["grading"];
    NormalizedGrading g;
    try {
        g.a = jg.at("a").get<long>();
        g.b = jg.at("b").get<long>();
        g.c = jg.at("c").get<long>();
        g.applied_sign = jg.value("applied_sign", 1);
        g.applied_scale = jg.value("applied_scale", 1L);
        if (jg.contains("applied_permutation"))
            g.applied_permutation = jg["applied_permutation"].get<std::array<int, 3>>();
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed grading object: ") + e.what());
    }
    if (g.a < 1 || g.b < 1 || g.c < 1 || g.a < g.b)
        throw UsageError("grading object must satisfy a >= b >= 1 and c >= 1");

    const json& jw = doc["word"];
    if (!jw.is_array()) throw UsageError("\"word\" must be an array");
    std::vector<GenFactor> factors;
    for (const json& jf : jw) {
        if (!jf.is_object() || !jf.contains("type") || !jf["type"].is_string())
            throw UsageError("generator must be an object with a \"type\" tag");
        std::string type = jf["type"].get<std::string>();
        if (type == "T") {
            factors.emplace_back(TorusFactor(rational_field(jf, "lambda")));
        } else if (type == "U") {
            factors.emplace_back(UElement(rational_field(jf, "lambda"), shift_field(jf, "f"), g));
        } else if (type == "S") {
            if (!jf.contains("tau") || !jf.contains("theta") || !jf.contains("s"))
                throw UsageError("S generator needs \"tau\", \"theta\" and \"s\"");
            const json& jt = jf["theta"];
            long k;
            try {
                k = jt.at("k").get<long>();
            } catch (const json::exception& e) {
                throw UsageError(std::string("malformed theta object: ") + e.what());
            }
            WElement tau(rational_field(jf["tau"], "lambda"), shift_field(jf["tau"], "f"), g);
            DElement theta(rational_field(jt, "lambda"), rational_field(jt, "mu"), k, g);
            WElement s(rational_field(jf["s"], "lambda"), shift_field(jf["s"], "f"), g);
            factors.emplace_back(SElement(std::move(tau), std::move(theta), std::move(s), g));
        } else {
            throw UsageError("unknown generator type \"" + type + "\"");
        }
    }
    return GenWord(g, std::move(factors));
}

std::string grading_to_text(const NormalizedGrading& g) {
    return "a=" + std::to_string(g.a) + " b=" + std::to_string(g.b) +
           " c=" + std::to_string(g.c);
}

}  // namespace grautkit
