#pragma once

#include <string>

#include "json.hpp"

#include "bm/asymmetry.hpp"
#include "bm/certify.hpp"
#include "bm/equidistant.hpp"
#include "bm/lemma.hpp"
#include "bm/search.hpp"

namespace bm {

using Json = nlohmann::json;

/// Rationals cross every wire as canonical "p/q" strings. Readers also
/// accept bare integer JSON numbers for convenience.
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json qvector_to_json(const QVector& v);
QVector qvector_from_json(const Json& j);

/// {"n": int, "entries": [["p/q", ...], ...]}
Json qmatrix_to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

/// {"n": int, "vertices": [["p/q", ...], ...]}
Json vpolytope_to_json(const VPolytope& p);
VPolytope vpolytope_from_json(const Json& j);

Json certificate_to_json(const SandwichCertificate& cert);
Json failure_to_json(const CertificationFailure& failure);
Json asymmetry_to_json(const AsymmetryResult& result, int contacts);
Json claim3d_to_json(const Claim3dReport& report);
Json equidistance_to_json(const EquidistanceCertificate& cert);
Json search_report_to_json(const SearchReport& report);

Json load_json_file(const std::string& path);

}  // namespace bm
