#include "vmr/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace vmr {
namespace {

std::ofstream open_out(const std::string& path, std::ios::openmode mode) {
  std::ofstream out(path, mode | std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  return in;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

double parse_field(const std::string& tok, const std::string& path, int line) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return d;
  } catch (const std::exception&) {
    throw IoError("malformed number '" + tok + "' in " + path + " line " +
                  std::to_string(line));
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, ',')) out.push_back(cur);
  return out;
}

}  // namespace

void write_snapshot(const Grid2D& f, const Axis& ax, const Axis& av, int j1,
                    const std::string& path) {
  auto out = open_out(path, std::ios::trunc);
  out << "x,v,f\n";
  for (long i1 = 0; i1 < f.nx; ++i1) {
    const std::string xs = fmt(ax.coord(j1, i1));
    for (long i2 = 0; i2 < f.nv; ++i2)
      out << xs << ',' << fmt(av.coord(j1, i2)) << ',' << fmt(f.at(i1, i2))
          << '\n';
  }
  finish(out, path);
}

SnapshotData read_snapshot(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line) || line != "x,v,f")
    throw IoError("missing 'x,v,f' header in " + path);
  SnapshotData d;
  int ln = 1;
  while (std::getline(in, line)) {
    ++ln;
    if (line.empty()) continue;
    const auto tok = split_csv(line);
    if (tok.size() != 3)
      throw IoError("expected 3 fields in " + path + " line " +
                    std::to_string(ln));
    d.x.push_back(parse_field(tok[0], path, ln));
    d.v.push_back(parse_field(tok[1], path, ln));
    d.f.push_back(parse_field(tok[2], path, ln));
  }
  return d;
}

void write_mesh(const SparseRep& rep, const std::string& path) {
  auto out = open_out(path, std::ios::trunc);
  out << "level,k1,k2,kind,value,detail\n";
  for (long k1 = 0; k1 < rep.coarse.nx; ++k1)
    for (long k2 = 0; k2 < rep.coarse.nv; ++k2)
      out << rep.j0 << ',' << k1 << ',' << k2 << ",coarse,"
          << fmt(rep.coarse.at(k1, k2)) << ",0\n";
  std::vector<std::uint64_t> keys;
  keys.reserve(rep.details.size());
  for (const auto& [k, d] : rep.details) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (const auto k : keys) {
    const Node n = Node::from_key(k);
    const auto vit = rep.nodal.find(k);
    out << n.level << ',' << n.k1 << ',' << n.k2 << ','
        << node_kind_name(n.kind) << ','
        << fmt(vit == rep.nodal.end() ? 0.0 : vit->second) << ','
        << fmt(rep.details.at(k)) << '\n';
  }
  finish(out, path);
}

std::vector<MeshRow> read_mesh(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line) || line != "level,k1,k2,kind,value,detail")
    throw IoError("missing mesh header in " + path);
  std::vector<MeshRow> rows;
  int ln = 1;
  while (std::getline(in, line)) {
    ++ln;
    if (line.empty()) continue;
    const auto tok = split_csv(line);
    if (tok.size() != 6)
      throw IoError("expected 6 fields in " + path + " line " +
                    std::to_string(ln));
    MeshRow r;
    r.level = int(parse_field(tok[0], path, ln));
    r.k1 = long(parse_field(tok[1], path, ln));
    r.k2 = long(parse_field(tok[2], path, ln));
    if (tok[3] == "coarse")
      r.kind = NodeKind::Coarse;
    else if (tok[3] == "row")
      r.kind = NodeKind::Row;
    else if (tok[3] == "col")
      r.kind = NodeKind::Col;
    else if (tok[3] == "mid")
      r.kind = NodeKind::Mid;
    else
      throw IoError("unknown node kind '" + tok[3] + "' in " + path +
                    " line " + std::to_string(ln));
    r.value = parse_field(tok[4], path, ln);
    r.detail = parse_field(tok[5], path, ln);
    rows.push_back(r);
  }
  return rows;
}

void append_timeseries(const DiagnosticsRecord& rec, const std::string& path) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) ||
                     std::filesystem::file_size(path, ec) == 0;
  auto out = open_out(path, std::ios::app);
  if (fresh) out << "t,mass,l1,l2,fmax,e_energy,active,ratio\n";
  out << fmt(rec.t) << ',' << fmt(rec.mass) << ',' << fmt(rec.l1) << ','
      << fmt(rec.l2) << ',' << fmt(rec.fmax) << ',' << fmt(rec.e_energy) << ','
      << rec.active << ',' << fmt(rec.ratio) << '\n';
  finish(out, path);
}

std::string read_text_file(const std::string& path) {
  auto in = open_in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in && !in.eof()) throw IoError("read failed: " + path);
  return ss.str();
}

}  // namespace vmr
