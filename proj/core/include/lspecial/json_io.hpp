#ifndef LSPECIAL_JSON_IO_HPP
#define LSPECIAL_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "lspecial/admissibility.hpp"
#include "lspecial/quartic.hpp"

namespace lspecial {

using Json = nlohmann::ordered_json;

// Scalars serialize as "p/q" strings (Exact) or IEEE-754 doubles (Approx);
// complex values as two-element arrays [re, im].
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// {"space":"xy"|"zw","terms":[{"e":[i,j],"c":[re,im]}]}, terms in grlex order.
Json bivar_to_json(const BivarPoly& p);
BivarPoly bivar_from_json(const Json& j);

// {"coeffs":[[re,im],...]}, index = power.
Json univar_to_json(const UnivarPoly& f);
UnivarPoly univar_from_json(const Json& j);

Json obstruction_report_to_json(const ObstructionReport& r);

Json construction_to_json(const QuarticConstruction& qc);

Json load_json_file(const std::filesystem::path& path);
void save_json_file(const Json& j, const std::filesystem::path& path);

}  // namespace lspecial

#endif  // LSPECIAL_JSON_IO_HPP
