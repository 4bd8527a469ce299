#include "necklace/mesh_io.hpp"

#include <cstdio>
#include <fstream>

#include "necklace/errors.hpp"

namespace necklace {

namespace {

std::string coord(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw DegenerateInputError("cannot write file: " + path);
    return f;
}

}  // namespace

void write_obj(const std::string& path, const std::vector<NamedMesh>& pieces) {
    std::ofstream f = open_out(path);
    int base = 0;
    for (const NamedMesh& p : pieces) {
        f << "o " << p.name << "\n";
        for (const auto& v : p.mesh.vertices)
            f << "v " << coord(v[0]) << " " << coord(v[1]) << " "
              << coord(v[2]) << "\n";
        for (const auto& face : p.mesh.faces)
            f << "f " << base + face[0] + 1 << " " << base + face[1] + 1
              << " " << base + face[2] + 1 << "\n";
        base += static_cast<int>(p.mesh.vertices.size());
    }
}

void write_curvature_csv(const std::string& path,
                         const std::vector<NamedMesh>& pieces) {
    std::ofstream f = open_out(path);
    f << "piece,vertex,x,y,z,gauss_curvature,height\n";
    for (const NamedMesh& p : pieces) {
        for (size_t i = 0; i < p.mesh.vertices.size(); ++i) {
            const auto& v = p.mesh.vertices[i];
            double k = i < p.mesh.gauss_curvature.size()
                           ? p.mesh.gauss_curvature[i]
                           : 0.0;
            double h = i < p.mesh.height.size() ? p.mesh.height[i] : v[2];
            f << p.name << "," << i << "," << coord(v[0]) << ","
              << coord(v[1]) << "," << coord(v[2]) << "," << coord(k) << ","
              << coord(h) << "\n";
        }
    }
}

}  // namespace necklace
