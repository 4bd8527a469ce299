#ifndef NECKLACE_MESH_IO_HPP
#define NECKLACE_MESH_IO_HPP

#include <string>
#include <vector>

#include "necklace/weierstrass.hpp"

namespace necklace {

struct NamedMesh {
    std::string name;
    SurfaceMesh mesh;
};

/// Wavefront OBJ: one "o <name>" object per piece, vertices ("v x y z")
/// followed by triangular faces with global 1-based indices.  Scalar
/// channels are not part of OBJ; see write_curvature_csv.
void write_obj(const std::string& path, const std::vector<NamedMesh>& pieces);

/// Parallel per-vertex channel export:
/// piece,vertex,x,y,z,gauss_curvature,height rows (matching OBJ order).
void write_curvature_csv(const std::string& path,
                         const std::vector<NamedMesh>& pieces);

}  // namespace necklace

#endif
