#include "dwinv/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "dwinv/bockstein.hpp"
#include "dwinv/chern.hpp"
#include "dwinv/transfer.hpp"

namespace dwinv {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg)
{
    throw SpecError((path.empty() ? std::string("/") : path) + ": " + msg);
}

const Json& field(const Json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object())
        fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(path + "/" + key, "missing field");
    return *it;
}

Int as_int(const Json& j, const std::string& path)
{
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    return j.get<Int>();
}

int small_int(const Json& j, const std::string& path)
{
    Int v = as_int(j, path);
    if (v < -1000000 || v > 1000000)
        fail(path, "integer out of range");
    return static_cast<int>(v);
}

QZ as_qz(const Json& j, const std::string& path)
{
    if (j.is_number_integer())
        return QZ(j.get<Int>(), 1);
    if (!j.is_string())
        fail(path, "expected a \"p/q\" string");
    try
    {
        return QZ::parse(j.get<std::string>());
    }
    catch (const std::exception& e)
    {
        fail(path, e.what());
    }
}

Element as_element(const Json& j, const FiniteGroup& g, const std::string& path)
{
    int x = small_int(j, path);
    if (x < 0 || x >= g.order())
        fail(path, "element index out of range");
    return x;
}

std::vector<Element> element_list(const Json& j, const FiniteGroup& g, const std::string& path)
{
    if (!j.is_array())
        fail(path, "expected an array of element indices");
    std::vector<Element> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_element(j[i], g, path + "/" + std::to_string(i)));
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SpecError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    return out;
}

Int parse_short_int(const std::string& s, const std::string& context)
{
    std::size_t used = 0;
    Int v = 0;
    try
    {
        v = std::stoll(s, &used);
    }
    catch (const std::exception&)
    {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw SpecError(context + ": expected an integer, got \"" + s + "\"");
    return v;
}

bool looks_like_json(const std::string& text)
{
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            return c == '{' || c == '[';
    return false;
}

/// Values of the homomorphism G -> Q/Z with the given images of gens.
QZCochain character_from_generators(const GroupPtr& gp, const std::vector<Element>& gens,
                                    const std::vector<QZ>& images, const std::string& path)
{
    const FiniteGroup& g = *gp;
    std::vector<QZ> values(static_cast<std::size_t>(g.order()));
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    seen[g.identity()] = 1;
    std::vector<Element> queue{g.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head)
    {
        Element a = queue[head];
        for (std::size_t i = 0; i < gens.size(); ++i)
        {
            Element b = g.mul(a, gens[i]);
            QZ v = values[a] + images[i];
            if (!seen[b])
            {
                seen[b] = 1;
                values[b] = v;
                queue.push_back(b);
            }
            else if (values[b] != v)
                fail(path, "images do not define a homomorphism to Q/Z");
        }
    }
    if (static_cast<int>(queue.size()) != g.order())
        fail(path, "generators do not generate the group");
    return QZCochain::dense(gp, 1, std::move(values));
}

std::vector<QZ> qz_list(const Json& j, std::size_t expected, const std::string& path)
{
    std::vector<QZ> out;
    if (j.is_array())
        for (std::size_t i = 0; i < j.size(); ++i)
            out.push_back(as_qz(j[i], path + "/" + std::to_string(i)));
    else
        out.push_back(as_qz(j, path));
    if (out.size() != expected)
        fail(path, "expected " + std::to_string(expected) + " images");
    return out;
}

/// phi on all of G, from {"gens":[..], "phi":[..]} or key-named variants.
QZCochain character_on_group(const Json& j, const GroupPtr& g, const std::string& key,
                             const std::string& path)
{
    std::vector<Element> gens;
    if (j.contains("gens"))
        gens = element_list(j["gens"], *g, path + "/gens");
    else if (g->order() > 1)
        gens = {1};
    const Json& phi = field(j, key, path);
    if (phi.is_array() && phi.size() == static_cast<std::size_t>(g->order()) && gens.size() != phi.size())
    {
        std::vector<QZ> values = qz_list(phi, phi.size(), path + "/" + key);
        QZCochain c = QZCochain::dense(g, 1, std::move(values));
        if (!is_homomorphism(c))
            fail(path + "/" + key, "values do not define a homomorphism to Q/Z");
        return c;
    }
    return character_from_generators(g, gens, qz_list(phi, gens.size(), path + "/" + key),
                                     path + "/" + key);
}

InducedRepSpec induced_at(const Json& j, const GroupPtr& g, const std::string& hkey,
                          const std::string& phikey, const std::string& path)
{
    return induced_from_json(field(j, hkey, path), field(j, phikey, path), g, path + "/" + phikey);
}

}   // namespace

Json parse_json_text(const std::string& text, const std::string& what)
{
    std::string body = !text.empty() && text[0] == '@' ? read_file(text.substr(1)) : text;
    try
    {
        return Json::parse(body);
    }
    catch (const Json::parse_error& e)
    {
        throw SpecError(what + ": malformed JSON at byte " + std::to_string(e.byte) + ": "
                        + e.what());
    }
}

GroupPtr group_from_json(const Json& j)
{
    const std::string kind = field(j, "kind", "").is_string() ? j["kind"].get<std::string>() : "";
    auto param = [&](std::initializer_list<const char*> keys) {
        for (const char* k : keys)
            if (j.contains(k))
                return small_int(j[k], std::string("/") + k);
        fail("/" + std::string(*keys.begin()), "missing field");
    };
    try
    {
        if (kind == "cyclic")
            return make_cyclic(param({"n"}));
        if (kind == "dihedral")
            return make_dihedral(param({"n"}));
        if (kind == "quaternion")
            return make_quaternion(param({"n"}));
        if (kind == "symmetric")
            return make_symmetric(param({"d", "n"}));
        if (kind == "sl2")
            return make_sl2(param({"q"}));
        if (kind == "table")
        {
            int order = small_int(field(j, "order", ""), "/order");
            const Json& t = field(j, "table", "");
            if (!t.is_array())
                fail("/table", "expected an array");
            std::vector<Element> table;
            for (std::size_t i = 0; i < t.size(); ++i)
                table.push_back(small_int(t[i], "/table/" + std::to_string(i)));
            return FiniteGroup::from_table(order, std::move(table), {}, j.value("name", ""));
        }
    }
    catch (const SpecError&)
    {
        throw;
    }
    catch (const std::invalid_argument& e)
    {
        throw SpecError(std::string("group: ") + e.what());
    }
    fail("/kind", "unknown group kind \"" + kind + "\"");
}

GroupPtr group_from_text(const std::string& text)
{
    if (!text.empty() && (text[0] == '@' || looks_like_json(text)))
        return group_from_json(parse_json_text(text, "group"));
    auto parts = split(text, ':');
    if (parts.size() != 2)
        throw SpecError("group: expected kind:param, got \"" + text + "\"");
    const char* key = parts[0] == "symmetric" ? "d" : parts[0] == "sl2" ? "q" : "n";
    Json j{{"kind", parts[0]}, {key, parse_short_int(parts[1], "group")}};
    return group_from_json(j);
}

BarChain chain_from_json(const Json& j, const GroupPtr& g)
{
    int degree = small_int(field(j, "degree", ""), "/degree");
    if (degree < 0 || degree > kMaxCochainDegree)
        fail("/degree", "degree out of range");
    const Json& terms = field(j, "terms", "");
    if (!terms.is_array())
        fail("/terms", "expected an array");
    BarChain z(g, degree);
    for (std::size_t i = 0; i < terms.size(); ++i)
    {
        std::string path = "/terms/" + std::to_string(i);
        const Json& t = terms[i];
        if (!t.is_array() || t.size() != 2)
            fail(path, "expected [coefficient, [elements]]");
        Tuple tuple = element_list(t[1], *g, path + "/1");
        if (static_cast<int>(tuple.size()) != degree)
            fail(path + "/1", "tuple length differs from the degree");
        z.add(tuple, as_int(t[0], path + "/0"));
    }
    return z;
}

Json chain_to_json(const BarChain& z)
{
    Json terms = Json::array();
    for (const auto& [t, k] : z.terms())
        terms.push_back(Json::array({k, t}));
    return Json{{"degree", z.degree()}, {"terms", terms}};
}

Json cochain_to_json(const QZCochain& c)
{
    Json values = Json::array();
    for (const QZ& v : c.values())
        values.push_back(v.str());
    return Json{{"ring", "QZ"}, {"degree", c.degree()}, {"values", values}};
}

QZCochain qz_cochain_from_json(const Json& j, const GroupPtr& g)
{
    if (j.value("ring", "QZ") != "QZ")
        fail("/ring", "only QZ cochains are accepted");
    int degree = small_int(field(j, "degree", ""), "/degree");
    if (degree < 0 || degree > kMaxCochainDegree)
        fail("/degree", "degree out of range");
    const Json& values = field(j, "values", "");
    Int n = tuple_count(g->order(), degree);
    if (!values.is_array() || static_cast<Int>(values.size()) != n)
        fail("/values", "expected " + std::to_string(n) + " values");
    return QZCochain::dense(g, degree, qz_list(values, values.size(), "/values"));
}

QZCochain character_from_json(const Json& j, const GroupPtr& g)
{
    return character_on_group(j, g, "phi", "");
}

Subgroup subgroup_from_json(const Json& j, const GroupPtr& g, const std::string& path)
{
    std::vector<Element> gens = element_list(j, *g, path);
    return Subgroup::generated_by(g, gens);
}

InducedRepSpec induced_from_json(const Json& gens, const Json& phi, const GroupPtr& g,
                                 const std::string& path)
{
    std::vector<Element> parent_gens = element_list(gens, *g, path + "/H");
    Subgroup h = Subgroup::generated_by(g, parent_gens);
    std::vector<Element> local;
    for (Element x : parent_gens)
        local.push_back(h.to_local(x));
    QZCochain c = character_from_generators(h.as_group(), local,
                                            qz_list(phi, local.size(), path), path);
    InducedRepSpec spec{h, c};
    spec.validate();
    return spec;
}

QZCochain cocycle_from_json(const Json& j, const GroupPtr& g)
{
    const Json& kj = field(j, "kind", "");
    if (!kj.is_string())
        fail("/kind", "expected a string");
    const std::string kind = kj.get<std::string>();
    if (kind == "zero")
        return QZCochain::zero(g, j.contains("degree") ? small_int(j["degree"], "/degree") : 3);
    if (kind == "dense")
        return qz_cochain_from_json(j, g);
    if (kind == "linking")
    {
        QZCochain phi1 = character_on_group(j, g, "phi", "");
        QZCochain phi2 = j.contains("phi2") ? character_on_group(j, g, "phi2", "") : phi1;
        return cup(phi1, bockstein_one(phi2));
    }
    if (kind == "twelve_c2")
        return twelve_c2_cocycle(induced_at(j, g, "H", "phi", ""));
    if (kind == "twelve_c2_evens")
        return twelve_c2_evens(induced_at(j, g, "H", "phi", ""));
    if (kind == "odd_part_c2")
        return odd_part_c2_evens(induced_at(j, g, "H", "phi", ""));
    if (kind == "two_c1c1")
        return two_c1c1_cocycle(induced_at(j, g, "H", "phi", ""), induced_at(j, g, "H2", "phi2", ""));
    if (kind == "c2")
    {
        QZCochain c = twelve_c2_cocycle(induced_at(j, g, "H", "phi", ""));
        Int ord = g->order();
        if (j.contains("order"))
            ord = as_int(j["order"], "/order");
        else if (g->order() <= snf_cap())
            ord = homology_group(g, 3).divisors.empty() ? 1 : homology_group(g, 3).divisors.back();
        return divide_class(c, 12, ord);
    }
    if (kind == "transfer")
    {
        Subgroup h = subgroup_from_json(field(j, "H", ""), g, "/H");
        return transfer_cochain(h, cocycle_from_json(field(j, "cocycle", ""), h.as_group()));
    }
    fail("/kind", "unknown cocycle kind \"" + kind + "\"");
}

QZCochain cocycle_from_text(const std::string& text, const GroupPtr& g)
{
    if (!text.empty() && (text[0] == '@' || looks_like_json(text)))
        return cocycle_from_json(parse_json_text(text, "cocycle"), g);
    if (text == "zero")
        return QZCochain::zero(g, 3);
    auto parts = split(text, ':');
    if (parts.size() == 2 && parts[0] == "linking")
    {
        auto kv = split(parts[1], '=');
        if (kv.size() != 2 || kv[0] != "phi")
            throw SpecError("cocycle: expected linking:phi=k");
        if (g->order() > 1 && Subgroup::generated_by(g, std::vector<Element>{1}).order() != g->order())
            throw SpecError("cocycle: linking:phi=k needs a cyclic group generated by element 1");
        Int k = parse_short_int(kv[1], "cocycle");
        Json j{{"kind", "linking"}, {"phi", QZ(k, g->order()).str()}};
        return cocycle_from_json(j, g);
    }
    throw SpecError("cocycle: unknown short form \"" + text + "\"");
}

ManifoldModel manifold_from_json(const Json& j)
{
    const Json& kj = field(j, "kind", "");
    if (!kj.is_string())
        fail("/kind", "expected a string");
    const std::string kind = kj.get<std::string>();
    auto finish = [&](ManifoldModel m) {
        if (j.contains("orientation") && small_int(j["orientation"], "/orientation") < 0)
            return reversed(m);
        return m;
    };
    try
    {
        if (kind == "lens")
            return finish(lens_space(small_int(field(j, "n", ""), "/n"), as_int(field(j, "q", ""), "/q")));
        if (kind == "quaternionic")
            return finish(quaternionic_space_form(small_int(field(j, "n", ""), "/n")));
        if (kind == "presentation")
        {
            Presentation p;
            p.generators = small_int(field(j, "generators", ""), "/generators");
            const Json& rel = field(j, "relators", "");
            if (!rel.is_array())
                fail("/relators", "expected an array of words");
            for (std::size_t i = 0; i < rel.size(); ++i)
            {
                std::string path = "/relators/" + std::to_string(i);
                if (!rel[i].is_array())
                    fail(path, "expected an array of signed generator indices");
                Word w;
                for (std::size_t k = 0; k < rel[i].size(); ++k)
                    w.push_back(small_int(rel[i][k], path + "/" + std::to_string(k)));
                p.relators.push_back(std::move(w));
            }
            const Json& qj = field(j, "quotient", "");
            GroupPtr g = qj.is_string() ? group_from_text(qj.get<std::string>()) : group_from_json(qj);
            std::vector<Element> images = element_list(field(j, "images", ""), *g, "/images");
            BarChain cycle = chain_from_json(field(j, "cycle", ""), g);
            ManifoldModel m{j.value("name", "presentation"), std::move(p), g, std::move(images),
                            std::move(cycle)};
            m.validate();
            return finish(std::move(m));
        }
    }
    catch (const SpecError&)
    {
        throw;
    }
    catch (const std::invalid_argument& e)
    {
        throw SpecError(std::string("manifold: ") + e.what());
    }
    fail("/kind", "unknown manifold kind \"" + kind + "\"");
}

ManifoldModel manifold_from_text(const std::string& text)
{
    if (!text.empty() && (text[0] == '@' || looks_like_json(text)))
        return manifold_from_json(parse_json_text(text, "manifold"));
    auto parts = split(text, ':');
    if (parts.size() != 2)
        throw SpecError("manifold: expected lens:n,q or quaternionic:n, got \"" + text + "\"");
    auto params = split(parts[1], ',');
    if (parts[0] == "lens" && params.size() == 2)
        return manifold_from_json(Json{{"kind", "lens"},
                                       {"n", parse_short_int(params[0], "manifold")},
                                       {"q", parse_short_int(params[1], "manifold")}});
    if (parts[0] == "quaternionic" && params.size() == 1)
        return manifold_from_json(
            Json{{"kind", "quaternionic"}, {"n", parse_short_int(params[0], "manifold")}});
    throw SpecError("manifold: unknown short form \"" + text + "\"");
}

Json group_ring_to_json(const GroupRingElement& e)
{
    Json terms = Json::array();
    for (const auto& [a, k] : e.terms())
        terms.push_back(Json::array({a.str(), k}));
    return Json{{"terms", terms}};
}

Json homology_to_json(const HomologyGroup& h)
{
    Json gens = Json::array();
    for (const auto& z : h.generators)
        gens.push_back(chain_to_json(z));
    return Json{{"group", h.group->name()},
                {"degree", h.degree},
                {"divisors", h.divisors},
                {"generators", gens}};
}

Json certificate_to_json(const CmCertificate& c)
{
    Json witnesses = Json::array();
    for (const auto& w : c.witnesses)
        witnesses.push_back(Json{{"subgroup_order", w.subgroup_order},
                                 {"index", w.index},
                                 {"gcd", w.gcd},
                                 {"m_divides_gcd", w.m_divides_gcd},
                                 {"gcd_divides_m", w.gcd_divides_m},
                                 {"kappa", w.kappa ? cochain_to_json(*w.kappa) : Json(nullptr)}});
    Json primes = Json::array();
    for (const auto& p : c.span_by_prime)
        primes.push_back(Json{{"p", p.p}, {"verdict", verdict_name(p.verdict)}});
    return Json{{"group", c.group->name()},
                {"m", c.m},
                {"gcd_reading", c.reading == GcdReading::Literal ? "literal" : "dividing"},
                {"h3_divisors", c.h3_divisors},
                {"condition_i", verdict_name(c.condition_i)},
                {"span_by_prime", primes},
                {"condition_ii", verdict_name(c.condition_ii)},
                {"witnesses", witnesses},
                {"verdict", verdict_name(c.verdict)},
                {"notes", c.notes}};
}

}   // namespace dwinv
