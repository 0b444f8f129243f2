#include "fplab/set_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace fplab {

namespace {

std::uint64_t parse_u64(const std::string& tok, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 19) {
    throw Error(ErrorCode::ParseError, std::string("bad ") + what + " '" + tok + "'");
  }
  return std::stoull(tok);
}

std::int64_t parse_i64(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoll(tok, &used);
    if (used != tok.size()) throw Error(ErrorCode::ParseError, std::string("bad ") + what + " '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, std::string("bad ") + what + " '" + tok + "'");
  }
}

FieldRef read_header(std::istream& in, std::uint64_t bound) {
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    std::string value;
    std::string extra;
    if (key != "p" || !(ls >> value) || (ls >> extra)) {
      throw Error(ErrorCode::ParseError, "expected header 'p <modulus>', got '" + line + "'");
    }
    return make_field(parse_u64(value, "modulus"), bound);
  }
  throw Error(ErrorCode::ParseError, "missing header 'p <modulus>'");
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
  return in;
}

}  // namespace

FpSet read_set(std::istream& in, std::uint64_t table_bound) {
  const FieldRef field = read_header(in, table_bound);
  BitVector bits(field->p());
  std::string tok;
  while (in >> tok) {
    const std::uint64_t x = parse_u64(tok, "element");
    if (x >= field->p()) throw Error(ErrorCode::BadInput, "element " + tok + " outside [0, p)");
    if (bits.test(x)) throw Error(ErrorCode::BadInput, "duplicate element " + tok);
    bits.set(x);
  }
  return FpSet(field, std::move(bits));
}

FpSet read_set_file(const std::string& path) {
  auto in = open_in(path);
  return read_set(in);
}

void write_set(std::ostream& out, const FpSet& s) {
  out << "p " << s.p() << '\n';
  bool first = true;
  s.for_each([&](std::uint32_t x) {
    if (!first) out << ' ';
    out << x;
    first = false;
  });
  out << '\n';
}

void write_set_file(const std::string& path, const FpSet& s) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write " + path);
  write_set(out, s);
}

Configuration3 read_configuration(std::istream& in) {
  const FieldRef field = read_header(in, kDefaultTableBound);
  const std::uint32_t p = field->p();
  std::vector<Point3> pts;
  std::vector<Plane> planes;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    std::vector<std::string> fields;
    std::string tok;
    while (ls >> tok) fields.push_back(tok);
    if (tag == "pt" && fields.size() == 3) {
      pts.push_back({reduce(parse_i64(fields[0], "coordinate"), p), reduce(parse_i64(fields[1], "coordinate"), p),
                     reduce(parse_i64(fields[2], "coordinate"), p)});
    } else if (tag == "pl" && fields.size() == 4) {
      planes.push_back(canonical_plane(p, parse_i64(fields[0], "coefficient"), parse_i64(fields[1], "coefficient"),
                                       parse_i64(fields[2], "coefficient"), parse_i64(fields[3], "coefficient")));
    } else {
      throw Error(ErrorCode::ParseError, "bad line '" + line + "'");
    }
  }
  return {PointSet3(field, std::move(pts)), PlaneSet(field, std::move(planes))};
}

Configuration3 read_configuration_file(const std::string& path) {
  auto in = open_in(path);
  return read_configuration(in);
}

void write_configuration(std::ostream& out, const PointSet3& pts, const PlaneSet& planes) {
  out << "p " << pts.p() << '\n';
  for (const auto& q : pts.points()) out << "pt " << q.x << ' ' << q.y << ' ' << q.z << '\n';
  for (const auto& pl : planes.planes()) out << "pl " << pl.a << ' ' << pl.b << ' ' << pl.c << ' ' << pl.d << '\n';
}

}  // namespace fplab
