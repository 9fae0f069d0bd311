#pragma once

#include <string>
#include <vector>

#include "vmr/mra2d.hpp"
#include "vmr/semilag.hpp"

namespace vmr {

// All files are plain CSV with LF line endings and 9 significant digits.

// Header `x,v,f`, finest grid row-major (x outer, v inner).
void write_snapshot(const Grid2D& f, const Axis& ax, const Axis& av, int j1,
                    const std::string& path);

struct SnapshotData {
  std::vector<double> x, v, f;  // one entry per row
};
SnapshotData read_snapshot(const std::string& path);

// Header `level,k1,k2,kind,value,detail`; every coarse node appears with
// detail 0, then the retained detail nodes.
void write_mesh(const SparseRep& rep, const std::string& path);

struct MeshRow {
  int level = 0;
  long k1 = 0, k2 = 0;
  NodeKind kind = NodeKind::Coarse;
  double value = 0.0, detail = 0.0;
};
std::vector<MeshRow> read_mesh(const std::string& path);

// Header `t,mass,l1,l2,fmax,e_energy,active,ratio`, one appended row per
// record; the header is written when the file is created or empty.
void append_timeseries(const DiagnosticsRecord& rec, const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace vmr
