#include "slicereg/io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace slicereg::io {

namespace {

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

nlohmann::json to_json(const Quaternion& q) {
  return nlohmann::json::array({q.w, q.x, q.y, q.z});
}

Quaternion quaternion_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw std::invalid_argument("quaternion JSON must be an array of four numbers");
  }
  return Quaternion{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
                    j[3].get<double>()};
}

nlohmann::json to_json(const RegularSeries& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(to_json(c));
  return nlohmann::json{{"radius", f.radius}, {"coeffs", coeffs}};
}

RegularSeries series_from_json(const nlohmann::json& j) {
  RegularSeries f;
  f.radius = j.value("radius", 1.0);
  if (!(f.radius > 0.0)) throw std::invalid_argument("series radius must be positive");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument("series JSON needs a coeffs array");
  }
  for (const auto& c : j["coeffs"]) f.coeffs.push_back(quaternion_from_json(c));
  return f;
}

nlohmann::json to_json(const PointCloud& cloud) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : cloud.points) pts.push_back(to_json(p));
  return nlohmann::json{{"points", pts}};
}

PointCloud cloud_from_json(const nlohmann::json& j) {
  PointCloud cloud;
  if (!j.contains("points") || !j["points"].is_array()) {
    throw std::invalid_argument("cloud JSON needs a points array");
  }
  for (const auto& p : j["points"]) cloud.points.push_back(quaternion_from_json(p));
  return cloud;
}

nlohmann::json to_json(const NDiameterResult& r) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& p : r.witnesses) w.push_back(to_json(p));
  return nlohmann::json{{"value", r.value},
                        {"witnesses", w},
                        {"method", r.method == NDiameterResult::Method::exact ? "exact" : "exchange"}};
}

nlohmann::json to_json(const FunctionalReport& rep) {
  nlohmann::json j{{"value", rep.value},
                   {"evaluations", rep.evaluations},
                   {"method", rep.method}};
  if (!rep.vars.empty()) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : rep.vars) vars.push_back(to_json(v));
    j["vars"] = vars;
    j["q"] = to_json(rep.q);
  }
  if (rep.slice.has_value()) {
    const SliceWitness& sw = *rep.slice;
    j["slice"] = nlohmann::json{
        {"I", nlohmann::json::array({sw.I.x, sw.I.y, sw.I.z})},
        {"w", nlohmann::json::array({nlohmann::json::array({sw.w[0].real(), sw.w[0].imag()}),
                                     nlohmann::json::array({sw.w[1].real(), sw.w[1].imag()}),
                                     nlohmann::json::array({sw.w[2].real(), sw.w[2].imag()})})},
        {"z", nlohmann::json::array({sw.z.real(), sw.z.imag()})}};
  }
  return j;
}

std::string quaternion_text(const Quaternion& q) {
  std::string out = fmt_full(q.w);
  auto term = [&out](double v, const char* unit) {
    out += (v < 0.0 || std::signbit(v)) ? "" : "+";
    out += fmt_full(v);
    out += unit;
  };
  term(q.x, "i");
  term(q.y, "j");
  term(q.z, "k");
  return out;
}

std::string profile_csv(const std::vector<RadialProfile>& profiles) {
  std::string out = "r,value,functional,n\n";
  for (const auto& p : profiles) {
    for (std::size_t t = 0; t < p.r_values.size(); ++t) {
      out += fmt_full(p.r_values[t]);
      out += ",";
      out += fmt_full(p.values[t]);
      out += ",";
      out += p.functional;
      out += ",";
      out += std::to_string(p.n);
      out += "\n";
    }
  }
  return out;
}

}  // namespace slicereg::io
