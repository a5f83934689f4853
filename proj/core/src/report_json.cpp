#include <golden/verifier.hpp>

#include <json.hpp>

namespace golden {

namespace {

using Json = nlohmann::ordered_json;

Json env_json(const Env& env) {
  Json out = Json::object();
  for (const auto& [name, v] : env.ints()) {
    if (v.fits_slong_p()) {
      out[name] = v.get_si();
    } else {
      out[name] = v.get_str();
    }
  }
  for (const auto& [name, v] : env.rats()) out[name] = to_fraction_string(v);
  if (env.seed()) out["G"] = Json::array({env.seed()->g0.get_str(), env.seed()->g1.get_str()});
  return out;
}

Json num_json(const GoldenNum& x) {
  return Json::array({to_fraction_string(x.a()), to_fraction_string(x.b())});
}

Json report_json(const Report& r) {
  Json failed = Json::array();
  for (const auto& f : r.failed) {
    Json item = {{"env", env_json(f.env)}, {"lhs", num_json(f.lhs)}, {"rhs", num_json(f.rhs)}};
    if (f.detail) item["error"] = *f.detail;
    failed.push_back(std::move(item));
  }
  Json skipped = Json::array();
  for (const auto& s : r.skipped) {
    skipped.push_back({{"env", env_json(s.env)}, {"reason", s.skip_reason.value_or("")}});
  }
  Json out = {
      {"identity_id", r.identity_id},
      {"anchor", r.anchor},
      {"tested", r.tested},
      {"passed", r.passed},
      {"failed", std::move(failed)},
      {"skipped", std::move(skipped)},
      {"filtered", r.filtered},
      {"grid_size", r.grid_size},
      {"sample_seed", r.sample_seed ? Json(*r.sample_seed) : Json(nullptr)},
      {"wall_ms", r.wall_ms},
  };
  return out;
}

}  // namespace

std::string to_json(const Report& r) { return report_json(r).dump(2); }

std::string to_json(std::span<const Report> reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(report_json(r));
  return out.dump(2);
}

}  // namespace golden
