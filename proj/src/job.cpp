#include "algind/job.hpp"

#include <nlohmann/json.hpp>

#include <cctype>

#include "algind/parser.hpp"

namespace algind {

using nlohmann::ordered_json;

std::string to_string(JobMode mode) {
    switch (mode) {
        case JobMode::Implicit: return "implicit";
        case JobMode::PolynomialMap: return "polynomial_map";
        case JobMode::RationalMap: return "rational_map";
        case JobMode::Partial: return "partial";
    }
    throw InternalError("unhandled mode");
}

std::vector<std::string> JobSpec::equation_vars() const {
    if (mode == JobMode::PolynomialMap || mode == JobMode::RationalMap) return x_vars;
    std::vector<std::string> all = x_vars;
    all.insert(all.end(), y_vars.begin(), y_vars.end());
    return all;
}

bool JobSpec::operator==(const JobSpec& other) const {
    auto enc_eq = [](const Enclosure& a, const Enclosure& b) { return a.mid() == b.mid() && a.rad() == b.rad(); };
    if (mode != other.mode || x_vars != other.x_vars || y_vars != other.y_vars || m != other.m ||
        assumptions != other.assumptions || seed != other.seed || precision_bits != other.precision_bits)
        return false;
    if (equations.size() != other.equations.size()) return false;
    for (std::size_t i = 0; i < equations.size(); ++i)
        if (equations[i].num() != other.equations[i].num() || equations[i].den() != other.equations[i].den())
            return false;
    if (point.has_value() != other.point.has_value()) return false;
    if (point) {
        if (point->bindings.size() != other.point->bindings.size()) return false;
        for (const auto& [k, v] : point->bindings) {
            auto it = other.point->bindings.find(k);
            if (it == other.point->bindings.end() || !enc_eq(v, it->second)) return false;
        }
    }
    return true;
}

namespace {

JobMode mode_from_string(const std::string& s) {
    if (s == "implicit") return JobMode::Implicit;
    if (s == "polynomial_map") return JobMode::PolynomialMap;
    if (s == "rational_map") return JobMode::RationalMap;
    if (s == "partial") return JobMode::Partial;
    throw ValidationError("unknown mode '" + s + "'");
}

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> read_var_list(const ordered_json& j, const std::string& key) {
    if (!j.is_array()) throw ValidationError("'" + key + "' must be an array of variable names");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string() || !valid_identifier(item.get<std::string>()))
            throw ValidationError("'" + key + "' entries must be identifiers");
        out.push_back(item.get<std::string>());
    }
    return out;
}

Enclosure read_enclosure(const ordered_json& j, const std::string& var) {
    if (j.is_string()) {
        // Decimal string: radius is one unit in the last printed place.
        std::string s = j.get<std::string>();
        Rational mid = Rational::from_string(s);
        auto dot = s.find('.');
        unsigned frac = dot == std::string::npos ? 0 : static_cast<unsigned>(s.size() - dot - 1);
        Rational rad = Rational(Int(1), Int(10).pow(frac));
        return Enclosure(std::move(mid), std::move(rad));
    }
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            if (k != "mid" && k != "rad") throw ValidationError("unknown key '" + k + "' in enclosure for '" + var + "'");
        if (!j.contains("mid") || !j.contains("rad") || !j["mid"].is_string() || !j["rad"].is_string())
            throw ValidationError("enclosure for '" + var + "' needs string fields 'mid' and 'rad'");
        Rational mid = Rational::from_string(j["mid"].get<std::string>());
        Rational rad = Rational::from_string(j["rad"].get<std::string>());
        if (rad.sign() < 0) throw ValidationError("negative radius for '" + var + "'");
        return Enclosure(std::move(mid), std::move(rad));
    }
    throw ValidationError("enclosure for '" + var + "' must be a string or a {mid, rad} object");
}

} // namespace

JobSpec parse_job(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("job document must be a JSON object");

    static const std::vector<std::string> known = {"mode", "x_vars", "y_vars",     "m",
                                                   "equations", "point",  "assumptions", "seed",
                                                   "precision_bits"};
    for (const auto& [k, v] : doc.items()) {
        bool ok = false;
        for (const auto& name : known) ok = ok || name == k;
        if (!ok) throw ValidationError("unknown key '" + k + "'");
    }

    JobSpec job;
    if (!doc.contains("mode") || !doc["mode"].is_string()) throw ValidationError("missing string field 'mode'");
    job.mode = mode_from_string(doc["mode"].get<std::string>());

    if (!doc.contains("x_vars")) throw ValidationError("missing field 'x_vars'");
    job.x_vars = read_var_list(doc["x_vars"], "x_vars");
    if (job.x_vars.empty()) throw ValidationError("'x_vars' must not be empty");
    job.y_vars = doc.contains("y_vars") ? read_var_list(doc["y_vars"], "y_vars") : std::vector<std::string>{};

    {
        std::vector<std::string> all = job.x_vars;
        all.insert(all.end(), job.y_vars.begin(), job.y_vars.end());
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t k = i + 1; k < all.size(); ++k)
                if (all[i] == all[k]) throw ValidationError("duplicate variable '" + all[i] + "'");
    }

    const std::size_t n = job.n();
    if (job.mode == JobMode::Partial) {
        if (!doc.contains("m") || !doc["m"].is_number_unsigned()) throw ValidationError("partial mode requires integer field 'm'");
        job.m = doc["m"].get<std::size_t>();
        if (job.m < 1 || job.m >= n) throw ValidationError("'m' must satisfy 1 <= m < n");
        if (job.y_vars.size() != job.m) throw ValidationError("partial mode needs exactly m y_vars");
    } else {
        if (doc.contains("m")) throw ValidationError("'m' is only valid in partial mode");
        if (job.mode == JobMode::Implicit) {
            if (job.y_vars.size() != n) throw ValidationError("implicit mode needs exactly n y_vars");
        } else if (!job.y_vars.empty() && job.y_vars.size() != n) {
            throw ValidationError("map modes take either no y_vars or exactly n of them");
        }
    }

    if (!doc.contains("equations") || !doc["equations"].is_array())
        throw ValidationError("missing array field 'equations'");
    std::size_t expected = job.mode == JobMode::Partial ? job.m : n;
    if (doc["equations"].size() != expected)
        throw ValidationError("expected " + std::to_string(expected) + " equations, got " +
                              std::to_string(doc["equations"].size()));

    std::vector<std::string> eq_vars = job.equation_vars();
    for (std::size_t i = 0; i < doc["equations"].size(); ++i) {
        const auto& item = doc["equations"][i];
        if (!item.is_string()) throw ValidationError("equations[" + std::to_string(i) + "] must be a string");
        ParsedExpr expr;
        try {
            expr = parse_expression(item.get<std::string>(), eq_vars);
        } catch (const ParseError& e) {
            throw ValidationError("equations[" + std::to_string(i) + "]: " + e.what());
        }
        if (std::holds_alternative<RationalFunction>(expr)) {
            if (job.mode != JobMode::RationalMap)
                throw ValidationError("equations[" + std::to_string(i) +
                                      "]: '/' by a non-constant is only allowed in rational_map mode");
            job.equations.push_back(std::get<RationalFunction>(expr));
        } else {
            job.equations.push_back(RationalFunction::from_polynomial(std::get<Polynomial>(expr)));
        }
    }

    if (doc.contains("point")) {
        if (!doc["point"].is_object()) throw ValidationError("'point' must be an object");
        PointAssignment pa;
        for (const auto& [var, enc] : doc["point"].items()) {
            bool declared = false;
            for (const auto& v : job.x_vars) declared = declared || v == var;
            for (const auto& v : job.y_vars) declared = declared || v == var;
            if (!declared) throw ValidationError("point binds undeclared variable '" + var + "'");
            pa.bindings.emplace(var, read_enclosure(enc, var));
        }
        job.point = std::move(pa);
    }

    if (job.mode == JobMode::Implicit || job.mode == JobMode::Partial) {
        if (!job.point) throw ValidationError("point required in " + to_string(job.mode) + " mode");
        for (const auto& v : job.x_vars)
            if (!job.point->binds(v)) throw ValidationError("point does not bind '" + v + "'");
        for (const auto& v : job.y_vars)
            if (!job.point->binds(v)) throw ValidationError("point does not bind '" + v + "'");
    }

    if (doc.contains("assumptions")) {
        if (!doc["assumptions"].is_array()) throw ValidationError("'assumptions' must be an array of strings");
        for (const auto& a : doc["assumptions"]) {
            if (!a.is_string() || a.get<std::string>().empty())
                throw ValidationError("'assumptions' entries must be non-empty strings");
            job.assumptions.push_back(a.get<std::string>());
        }
    }

    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) throw ValidationError("'seed' must be an unsigned integer");
        job.seed = doc["seed"].get<std::uint64_t>();
    }

    if (doc.contains("precision_bits")) {
        if (!doc["precision_bits"].is_number_unsigned() || doc["precision_bits"].get<std::uint64_t>() == 0)
            throw ValidationError("'precision_bits' must be a positive integer");
        job.precision_bits = static_cast<long>(doc["precision_bits"].get<std::uint64_t>());
    }

    return job;
}

std::string format_canonical(const JobSpec& job) {
    ordered_json doc;
    doc["mode"] = to_string(job.mode);
    doc["x_vars"] = job.x_vars;
    doc["y_vars"] = job.y_vars;
    if (job.mode == JobMode::Partial) doc["m"] = job.m;
    ordered_json eqs = ordered_json::array();
    for (const auto& e : job.equations) eqs.push_back(format_canonical(e));
    doc["equations"] = eqs;
    if (job.point) {
        ordered_json pt = ordered_json::object();
        // Declared variable order keeps the rendering deterministic.
        std::vector<std::string> order = job.x_vars;
        order.insert(order.end(), job.y_vars.begin(), job.y_vars.end());
        for (const auto& v : order) {
            auto it = job.point->bindings.find(v);
            if (it == job.point->bindings.end()) continue;
            pt[v] = {{"mid", it->second.mid().to_string()}, {"rad", it->second.rad().to_string()}};
        }
        doc["point"] = pt;
    }
    doc["assumptions"] = job.assumptions;
    if (job.seed) doc["seed"] = *job.seed;
    doc["precision_bits"] = static_cast<std::uint64_t>(job.precision_bits);
    return doc.dump(2);
}

std::string job_digest(const JobSpec& job) {
    std::string canon = format_canonical(job);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace algind
