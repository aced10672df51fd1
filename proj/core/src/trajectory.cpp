#include "dwexp/trajectory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

static_assert(std::endian::native == std::endian::little,
              "the trajectory container stores raw little-endian doubles; "
              "porting to a big-endian host needs byte swaps here");

namespace dwexp {

namespace {

constexpr char kMagic[8] = {'D', 'W', 'T', 'R', 'A', 'J', '0', '1'};

nlohmann::json header_json(const Trajectory& t) {
  nlohmann::json j;
  j["grid"] = {{"dim", t.grid.dim},
               {"half_width", t.grid.half_width},
               {"points_per_dim", t.grid.points_per_dim}};
  j["dt"] = t.dt;
  j["snap_spacing"] = t.snap_spacing;
  j["times"] = t.times;
  j["amplitude"] = t.amplitude;
  if (t.forcing) {
    j["forcing"] = {
        {"p", t.forcing->p},
        {"form", t.forcing->form == NonlinearForm::signed_power ? "signed" : "unsigned"},
        {"sign", t.forcing->sign}};
  } else {
    j["forcing"] = nullptr;
  }
  return j;
}

void require_writable(const Trajectory& t) {
  const std::size_t n = t.times.size();
  if (n == 0 || t.u.size() != n || t.du.size() != n)
    throw std::invalid_argument("write_trajectory: snapshot arrays empty or mismatched");
  for (std::size_t i = 0; i < n; ++i)
    if (!(t.u[i].grid() == t.grid) || !(t.du[i].grid() == t.grid))
      throw std::invalid_argument("write_trajectory: snapshot grid differs from trajectory grid");
}

std::vector<double> read_block(std::ifstream& in, std::size_t count, const std::string& path) {
  std::vector<double> vals(count);
  in.read(reinterpret_cast<char*>(vals.data()), static_cast<std::streamsize>(count * 8));
  if (!in) throw std::runtime_error("read_trajectory: truncated snapshot data in " + path);
  for (double v : vals)
    if (!std::isfinite(v))
      throw std::runtime_error("read_trajectory: non-finite sample in " + path);
  return vals;
}

}  // namespace

std::size_t snapshot_index(const Trajectory& traj, double t) {
  for (std::size_t i = 0; i < traj.times.size(); ++i)
    if (std::abs(traj.times[i] - t) <= 1e-9 * (1.0 + std::abs(t))) return i;
  throw std::invalid_argument("snapshot_index: t = " + std::to_string(t) +
                              " is not a stored snapshot time");
}

void write_trajectory(const Trajectory& traj, const std::string& path) {
  require_writable(traj);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("write_trajectory: cannot open " + path);
  out.write(kMagic, 8);
  const std::string header = header_json(traj).dump();
  const std::uint64_t hlen = header.size();
  out.write(reinterpret_cast<const char*>(&hlen), 8);
  out.write(header.data(), static_cast<std::streamsize>(hlen));
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const auto u = traj.u[i].values();
    const auto d = traj.du[i].values();
    out.write(reinterpret_cast<const char*>(u.data()), static_cast<std::streamsize>(u.size() * 8));
    out.write(reinterpret_cast<const char*>(d.data()), static_cast<std::streamsize>(d.size() * 8));
  }
  out.flush();
  if (!out) throw std::runtime_error("write_trajectory: write failed for " + path);
}

Trajectory read_trajectory(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_trajectory: cannot open " + path);

  char magic[8];
  in.read(magic, 8);
  if (!in || !std::equal(magic, magic + 8, kMagic))
    throw std::runtime_error("read_trajectory: " + path + " is not a DWTRAJ01 container");

  std::uint64_t hlen = 0;
  in.read(reinterpret_cast<char*>(&hlen), 8);
  if (!in || hlen == 0 || hlen > (1ull << 30))
    throw std::runtime_error("read_trajectory: implausible header length in " + path);
  std::string header(hlen, '\0');
  in.read(header.data(), static_cast<std::streamsize>(hlen));
  if (!in) throw std::runtime_error("read_trajectory: truncated header in " + path);

  Trajectory t;
  try {
    const nlohmann::json j = nlohmann::json::parse(header);
    const auto& grid = j.at("grid");
    t.grid = make_grid(grid.at("dim").get<int>(), grid.at("half_width").get<double>(),
                       grid.at("points_per_dim").get<int>());
    t.dt = j.at("dt").get<double>();
    t.snap_spacing = j.at("snap_spacing").get<double>();
    t.times = j.at("times").get<std::vector<double>>();
    t.amplitude = j.at("amplitude").get<double>();
    const auto& f = j.at("forcing");
    if (!f.is_null()) {
      Nonlinearity nl;
      nl.p = f.at("p").get<double>();
      const std::string form = f.at("form").get<std::string>();
      if (form == "signed")
        nl.form = NonlinearForm::signed_power;
      else if (form == "unsigned")
        nl.form = NonlinearForm::unsigned_power;
      else
        throw std::invalid_argument("unknown nonlinearity form \"" + form + "\"");
      nl.sign = f.at("sign").get<int>();
      require_valid(nl);
      t.forcing = nl;
    }
  } catch (const std::exception& e) {
    throw std::runtime_error("read_trajectory: invalid header in " + path + ": " + e.what());
  }

  if (t.times.empty() || t.times.front() != 0.0)
    throw std::runtime_error("read_trajectory: times must start at 0 in " + path);
  for (std::size_t i = 0; i + 1 < t.times.size(); ++i)
    if (!(t.times[i] < t.times[i + 1]))
      throw std::runtime_error("read_trajectory: times must increase in " + path);
  if (!(t.dt > 0.0) || !(t.snap_spacing > 0.0) || !std::isfinite(t.amplitude))
    throw std::runtime_error("read_trajectory: invalid step metadata in " + path);

  const std::size_t count = t.grid.point_count();
  t.u.reserve(t.times.size());
  t.du.reserve(t.times.size());
  for (std::size_t i = 0; i < t.times.size(); ++i) {
    t.u.emplace_back(t.grid, read_block(in, count, path));
    t.du.emplace_back(t.grid, read_block(in, count, path));
  }
  if (in.peek() != std::char_traits<char>::eof())
    throw std::runtime_error("read_trajectory: trailing bytes in " + path);
  return t;
}

}  // namespace dwexp
