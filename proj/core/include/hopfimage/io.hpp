#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "json.hpp"

#include "hopfimage/axioms.hpp"
#include "hopfimage/family.hpp"
#include "hopfimage/free_product.hpp"
#include "hopfimage/inner_faithful.hpp"

namespace hopfimage {

using Json = nlohmann::ordered_json;

/// Parsed objects are axiom-checked unless verify is off.
struct LoadOptions {
  bool verify = true;
};

Json to_json(FieldSpec field);
Json to_json(const Scalar& s);
Json to_json(std::span<const Scalar> v);
Json to_json(const Matrix& m);
Json to_json(const Algebra& a);
Json to_json(const HopfAlgebra& h);
/// Source and target are written inline.
Json to_json(const AlgebraMorphism& f);
Json to_json(const MorphismFamily& fam);
Json to_json(const Subspace& s);
Json to_json(const AxiomReport& report);
Json to_json(const HopfIdealCertificate& cert);
Json to_json(const TruncatedFreeProduct& fp, const FPElement& x);
Json to_json(const std::vector<const TruncatedFreeProduct*>& legs, const FPTensor& x);

FieldSpec field_from_json(const Json& j);
Scalar scalar_from_json(FieldSpec field, const Json& j, const std::string& where);

/// Every parser reports the JSON path of the first offending value.
Algebra algebra_from_json(const Json& j, const LoadOptions& opts = {});
HopfAlgebra hopf_from_json(const Json& j, const LoadOptions& opts = {});
Endpoint endpoint_from_json(const Json& j, const LoadOptions& opts = {});
AlgebraMorphism morphism_from_json(const Json& j, const LoadOptions& opts = {});
MorphismFamily family_from_json(const Json& j, const LoadOptions& opts = {});

/// Reads a JSON file; ParseError (with the file name) on failure.
Json load_json_file(const std::filesystem::path& path);

/// A reference is a builtin name, a file path, or an inline JSON object.
std::shared_ptr<const HopfAlgebra> resolve_hopf(const Json& ref, const LoadOptions& opts = {});
Endpoint resolve_endpoint(const Json& ref, const LoadOptions& opts = {});
AlgebraMorphism resolve_morphism(const Json& ref, const LoadOptions& opts = {});
MorphismFamily resolve_family(const Json& ref, const LoadOptions& opts = {});

/// The same for a command-line argument: builtin name or file path.
Json reference_from_argument(const std::string& arg);

}  // namespace hopfimage
