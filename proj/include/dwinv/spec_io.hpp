/**
 * JSON and short-form specs for groups, manifolds, cochains and cocycle
 * constructors, and JSON renderings of results.
 *
 * Short forms: groups "cyclic:3", "dihedral:5", "quaternion:3" (Q_12),
 * "symmetric:3", "sl2:3"; manifolds "lens:n,q", "quaternionic:n";
 * cocycles "zero" and "linking:phi=k" (phi(g^x) = k x / n on Z/n).
 * Any spec may also be JSON text, or "@path" to read JSON from a file.
 */
#ifndef DWINV_SPEC_IO_HPP
#define DWINV_SPEC_IO_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "dwinv/cmtype.hpp"
#include "dwinv/dw.hpp"
#include "dwinv/homology.hpp"
#include "dwinv/manifolds.hpp"

namespace dwinv {

using Json = nlohmann::json;

/// Malformed input; the message names the offending JSON path or offset.
class SpecError : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

/// Resolves "@path" and parses JSON text, reporting the byte offset of
/// syntax errors.
Json parse_json_text(const std::string& text, const std::string& what);

GroupPtr group_from_json(const Json& j);
GroupPtr group_from_text(const std::string& text);

ManifoldModel manifold_from_json(const Json& j);
ManifoldModel manifold_from_text(const std::string& text);

BarChain chain_from_json(const Json& j, const GroupPtr& g);
Json chain_to_json(const BarChain& z);

/// {"ring":"QZ","degree":n,"values":["p/q",..]} with values in flat order.
Json cochain_to_json(const QZCochain& c);
QZCochain qz_cochain_from_json(const Json& j, const GroupPtr& g);

/// phi: G -> Q/Z from {"gens":[..], "phi":[images]} (gens default to [1]),
/// or a full value list of length |G|.
QZCochain character_from_json(const Json& j, const GroupPtr& g);

/// Subgroup from a list of generator indices.
Subgroup subgroup_from_json(const Json& j, const GroupPtr& g, const std::string& path);

/**
 * A homomorphism H -> Q/Z from images of the generators listed for H, in
 * the same order; a single string applies to a one-generator list.
 */
InducedRepSpec induced_from_json(const Json& gens, const Json& phi, const GroupPtr& g,
                                 const std::string& path);

/**
 * Cocycle constructors by name: zero, linking, dense, twelve_c2,
 * twelve_c2_evens, two_c1c1, odd_part_c2, c2 (twelve_c2 divided by 12
 * modulo "order", by default the exponent of H^3(G; Q/Z), or |G| beyond
 * the size cap), transfer (of a nested spec on H).
 */
QZCochain cocycle_from_json(const Json& j, const GroupPtr& g);
QZCochain cocycle_from_text(const std::string& text, const GroupPtr& g);

/// {"terms":[["0/1",1],["1/3",2]]}.
Json group_ring_to_json(const GroupRingElement& e);
Json homology_to_json(const HomologyGroup& h);
Json certificate_to_json(const CmCertificate& c);

}   // namespace dwinv

#endif
