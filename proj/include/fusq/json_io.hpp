#pragma once

#include "json.hpp"

#include "fusq/preprojective.hpp"

namespace fusq {

using json = nlohmann::json;

json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const json& j);

json to_json(const Mat& m);
Mat mat_from_json(const json& j);

json to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

json to_json(const Quiver& q, const QuiverModule& m);
QuiverModule quiver_module_from_json(const Quiver& q, const json& j);

json to_json(const Backend& b);
Backend backend_from_json(const json& j);

json to_json(const Backend& b, const Obj& o);
Obj obj_from_json(const Backend& b, const json& j);

json to_json(const CenterObject& z);
CenterObject center_from_json(BackendPtr b, const json& j);

json to_json(const CatModule& m);
CatModule cat_module_from_json(BackendPtr b, const json& j);

json to_json(const Relation& r);
Relation relation_from_json(BackendPtr b, const json& j);

}  // namespace fusq
