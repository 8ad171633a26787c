#include "symcoh/specs.hpp"

namespace symcoh {

namespace {

long json_long(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ConfigError(std::string(what) + " must be an integer");
    return j.get<long>();
}

}  // namespace

FiniteGroup group_from_spec(const Json& spec) {
    if (!spec.is_object()) throw ConfigError("group spec must be a JSON object");
    if (spec.contains("family")) {
        std::string fam = spec.at("family").get<std::string>();
        if (fam == "cyclic") return FiniteGroup::cyclic(static_cast<int>(json_long(spec.at("n"), "n")));
        if (fam == "dihedral")
            return FiniteGroup::dihedral(static_cast<int>(json_long(spec.at("n"), "n")));
        if (fam == "symmetric")
            return FiniteGroup::symmetric(static_cast<int>(json_long(spec.at("n"), "n")));
        if (fam == "klein") return FiniteGroup::klein();
        if (fam == "quaternion8") return FiniteGroup::quaternion8();
        throw ConfigError("unknown group family '" + fam + "'");
    }
    if (spec.contains("product")) {
        const Json& parts = spec.at("product");
        if (!parts.is_array() || parts.size() != 2)
            throw ConfigError("product spec needs exactly two factors");
        return FiniteGroup::product(group_from_spec(parts[0]), group_from_spec(parts[1]));
    }
    if (spec.contains("table")) {
        const Json& t = spec.at("table");
        if (!t.is_array()) throw ConfigError("table spec must be an array of rows");
        std::vector<std::vector<int>> mul;
        for (const auto& row : t) {
            std::vector<int> r;
            for (const auto& v : row) r.push_back(static_cast<int>(json_long(v, "table entry")));
            mul.push_back(std::move(r));
        }
        return FiniteGroup::from_table(std::move(mul));
    }
    throw ConfigError("group spec needs 'family', 'product' or 'table'");
}

Domain field_from_spec(const Json& spec) {
    if (spec.is_string() && spec.get<std::string>() == "Q") return Domain::Q();
    if (spec.is_object() && spec.contains("Fp")) return Domain::Fp(json_long(spec.at("Fp"), "Fp"));
    throw ConfigError("field spec must be {\"Fp\": p} or \"Q\"");
}

Scalar scalar_from_literal(const Domain& dom, const Json& v) {
    if (v.is_number_integer()) return Scalar::from_int(dom, v.get<long long>());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) return Scalar::from_int(dom, std::stoll(s));
            if (!(dom == Domain::Q()))
                throw ConfigError("fraction literal '" + s + "' needs the rational field");
            long long num = std::stoll(s.substr(0, slash));
            long long den = std::stoll(s.substr(slash + 1));
            if (den == 0) throw ConfigError("fraction with zero denominator");
            return Scalar::from_rational(Rational(num, den));
        } catch (const std::invalid_argument&) {
            throw ConfigError("bad scalar literal '" + s + "'");
        } catch (const std::out_of_range&) {
            throw ConfigError("scalar literal '" + s + "' out of range");
        }
    }
    throw ConfigError("scalar literal must be an integer or a string");
}

TwoCocycle cocycle_from_spec(const FiniteGroup& g, const Domain& dom, const Json& spec) {
    if (!spec.is_object() || !spec.contains("kind"))
        throw ConfigError("cocycle spec must be an object with a 'kind'");
    std::string kind = spec.at("kind").get<std::string>();
    if (kind == "trivial") return TwoCocycle::trivial(g, dom);
    if (kind == "pairing") {
        if (!spec.contains("zeta")) throw ConfigError("pairing cocycle needs 'zeta'");
        return TwoCocycle::pairing(g, scalar_from_literal(dom, spec.at("zeta")));
    }
    if (kind == "table") {
        const Json& t = spec.at("values");
        if (!t.is_array()) throw ConfigError("cocycle table must be an array of rows");
        std::vector<std::vector<Scalar>> values;
        for (const auto& row : t) {
            std::vector<Scalar> r;
            for (const auto& v : row) r.push_back(scalar_from_literal(dom, v));
            values.push_back(std::move(r));
        }
        return TwoCocycle::from_table(g, dom, std::move(values));
    }
    throw ConfigError("unknown cocycle kind '" + kind + "'");
}

}  // namespace symcoh
