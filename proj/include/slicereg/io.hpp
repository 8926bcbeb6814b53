#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "slicereg/functionals.hpp"
#include "slicereg/geometry.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/series.hpp"

namespace slicereg::io {

// JSON forms: quaternion as [w, x, y, z]; series as {"radius": r,
// "coeffs": [[w,x,y,z], ...]} with index = degree; cloud as {"points": [...]}.
nlohmann::json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RegularSeries& f);
RegularSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PointCloud& cloud);
PointCloud cloud_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NDiameterResult& r);
nlohmann::json to_json(const FunctionalReport& rep);

// Report text form `a+bi+cj+dk` with full-precision decimal coordinates.
std::string quaternion_text(const Quaternion& q);

// CSV with header `r,value,functional,n`, one row per radius.
std::string profile_csv(const std::vector<RadialProfile>& profiles);

}  // namespace slicereg::io
