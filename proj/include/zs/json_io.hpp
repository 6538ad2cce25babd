#ifndef ZS_JSON_IO_HPP
#define ZS_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "zs/classify.hpp"
#include "zs/discriminant.hpp"
#include "zs/gradients.hpp"
#include "zs/pathfinder.hpp"
#include "zs/potential.hpp"

namespace zs {

using json = nlohmann::json;

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

// "re+imj" / "re-imj", the CSV serialization of complex values
std::string complex_to_csv(cplx z);

json potential_to_json(const Potential& p);
Potential potential_from_json(const json& j);

json layout_to_json(const LayoutReport& layout);
json report_to_json(const SpectrumReport& report);
SpectrumReport report_from_json(const json& j);

json gradient_to_json(const GradientField& g);
GradientField gradient_from_json(const json& j);

json qpoly_to_json(const CharPolynomial& q, int R, SpectrumKind which, cplx discriminant,
                   double indicator);

json path_to_json(const std::vector<PathSample>& path);
std::string path_to_csv(const std::vector<PathSample>& path);

Potential load_potential(const std::string& file);
void save_json(const json& j, const std::string& file);
void save_text(const std::string& text, const std::string& file);

} // namespace zs

#endif
