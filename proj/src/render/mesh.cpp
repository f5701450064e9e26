#include <stdexcept>
#include <string>

#include "json.hpp"
#include "mercator/error.hpp"
#include "mercator/render/geometry.hpp"

namespace mercator::render {

void Mesh::validate() const {
  if (vertices.empty()) throw std::invalid_argument("mesh has no vertices");
  const int n = static_cast<int>(vertices.size());
  for (const auto& e : edges) {
    if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n) {
      throw std::invalid_argument("mesh edge index out of range");
    }
  }
}

Mesh Mesh::unit_cube() {
  Mesh m;
  for (int i = 0; i < 8; ++i) {
    m.vertices.push_back({(i & 1) ? 0.5 : -0.5, (i & 2) ? 0.5 : -0.5, (i & 4) ? 0.5 : -0.5});
  }
  for (int i = 0; i < 8; ++i)
    for (int bit : {1, 2, 4})
      if (!(i & bit)) m.edges.push_back({i, i | bit});
  return m;
}

std::string mesh_to_json(const Mesh& mesh) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : mesh.vertices) doc["vertices"].push_back({v.x, v.y, v.z});
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : mesh.edges) doc["edges"].push_back({e[0], e[1]});
  return doc.dump();
}

Mesh mesh_from_json(std::string_view text) {
  nlohmann::json doc;
  Mesh mesh;
  try {
    doc = nlohmann::json::parse(text);
    for (const auto& v : doc.at("vertices")) {
      if (!v.is_array() || v.size() != 3) throw std::invalid_argument("mesh vertex must be [x,y,z]");
      mesh.vertices.push_back({v[0].get<double>(), v[1].get<double>(), v[2].get<double>()});
    }
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("mesh edge must be [i,j]");
        mesh.edges.push_back({e[0].get<int>(), e[1].get<int>()});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed mesh json: ") + e.what());
  }
  mesh.validate();
  return mesh;
}

Wireframe make_wireframe(const Mesh& mesh, int subdivide) {
  if (subdivide < 0) throw std::invalid_argument("subdivision count must be non-negative");
  mesh.validate();
  Wireframe w;
  w.points = mesh.vertices;
  for (const auto& e : mesh.edges) {
    std::vector<int> chain{e[0]};
    const Vec3 a = mesh.vertices[e[0]];
    const Vec3 b = mesh.vertices[e[1]];
    for (int k = 1; k <= subdivide; ++k) {
      const double s = static_cast<double>(k) / (subdivide + 1);
      chain.push_back(static_cast<int>(w.points.size()));
      w.points.push_back(a + s * (b - a));
    }
    chain.push_back(e[1]);
    w.chains.push_back(std::move(chain));
  }
  return w;
}

void MotionState::validate() const {
  if (!(std::fabs(v) < 1.0)) throw VelocityError("velocity must satisfy |v| < 1");
  if (!(y0 > 0.0)) throw std::invalid_argument("closest-approach distance y0 must be positive");
  if (!std::isfinite(z_offset)) throw std::invalid_argument("z offset must be finite");
}

}  // namespace mercator::render
