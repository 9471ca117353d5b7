#include <CLI11.hpp>

#include <atomic>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "gamma0fd/cosets.hpp"
#include "gamma0fd/render.hpp"
#include "gamma0fd/report.hpp"
#include "gamma0fd/verify.hpp"

namespace {

using gamma0fd::i64;

struct output_sink {
  std::string path;  // empty = stdout
  std::ofstream file;

  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path, std::ios::binary);
      if (!file) throw gamma0fd::error("cannot open output file " + path);
    }
    return file;
  }
};

// "A..B" or a single level.
std::pair<i64, i64> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const i64 n = std::stoll(text);
    return {n, n};
  }
  const i64 a = std::stoll(text.substr(0, dots));
  const i64 b = std::stoll(text.substr(dots + 2));
  if (a > b) throw CLI::ValidationError("range", "empty range " + text);
  return {a, b};
}

int run_verify(const std::string& range, int jobs, output_sink& out) {
  const auto [first, last] = parse_range(range);
  const gamma0fd::modulus check_lo(first);  // validates both ends
  const gamma0fd::modulus check_hi(last);
  (void)check_lo;
  (void)check_hi;

  std::mutex mu;
  std::condition_variable cv;
  std::map<i64, gamma0fd::verify_report> done;
  std::atomic<i64> next{first};
  bool all_ok = true;

  const int workers = std::max(1, jobs);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int k = 0; k < workers; ++k) {
    pool.emplace_back([&] {
      for (;;) {
        const i64 n = next.fetch_add(1);
        if (n > last) return;
        gamma0fd::verify_report r;
        try {
          r = gamma0fd::verify_modulus(n);
        } catch (const std::exception& e) {
          r.n = n;
          r.ok = false;
          r.failures.push_back({"internal", e.what()});
        }
        std::lock_guard<std::mutex> lock(mu);
        done.emplace(n, std::move(r));
        cv.notify_all();
      }
    });
  }

  // Stream strictly in order so partial progress is usable.
  std::string first_failure;
  {
    std::unique_lock<std::mutex> lock(mu);
    for (i64 n = first; n <= last; ++n) {
      cv.wait(lock, [&] { return done.count(n) > 0; });
      const gamma0fd::verify_report& r = done.at(n);
      out.stream() << gamma0fd::verify_line_json(r) << "\n" << std::flush;
      if (!r.ok) {
        all_ok = false;
        if (first_failure.empty())
          first_failure = "N=" + std::to_string(n) + " " + r.failures.front().suite + ": " +
                          r.failures.front().detail;
      }
      done.erase(n);
    }
  }
  for (std::thread& th : pool) th.join();
  out.stream().flush();
  if (!all_ok) {
    std::cerr << "verification failed: " << first_failure << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected fundamental domains for Gamma_0(N): widths, cosets, cusps,"
               " boundary gluing, genus, SVG"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags remain valid after the subcommand

  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  bool json_flag = false;
  app.add_flag("--json", json_flag, "emit machine-readable JSON (the default for all"
                                    " commands except render)");
  std::string range_flag;
  app.add_option("--range", range_flag, "sweep levels A..B (one document per level)");

  i64 level = 0;
  const auto add_level = [&](CLI::App* cmd) {
    cmd->add_option("N", level, "level (2 <= N <= 2^20)");
  };

  CLI::App* cmd_wtable = app.add_subcommand("wtable", "width table W/M for one level");
  add_level(cmd_wtable);
  CLI::App* cmd_cosets = app.add_subcommand("cosets", "canonical coset representatives");
  add_level(cmd_cosets);
  CLI::App* cmd_cusps = app.add_subcommand("cusps", "cusp classes with widths and members");
  add_level(cmd_cusps);
  CLI::App* cmd_arcs = app.add_subcommand("arcs", "boundary arc census");
  add_level(cmd_arcs);
  CLI::App* cmd_gluing = app.add_subcommand("gluing", "boundary pairing with witnesses");
  add_level(cmd_gluing);
  CLI::App* cmd_genus = app.add_subcommand("genus", "genus of the glued surface");
  add_level(cmd_genus);

  CLI::App* cmd_render = app.add_subcommand("render", "SVG picture of the domain");
  add_level(cmd_render);
  gamma0fd::render_options ropt;
  cmd_render->add_option("--svg-clip", ropt.clip_y, "vertical ceiling (default 2.2)");
  cmd_render->add_option("--width", ropt.width_px, "image width in pixels");
  bool no_labels = false;
  cmd_render->add_flag("--no-labels", no_labels, "omit triangle labels");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run every identity suite over a range");
  std::string range;
  cmd_verify->add_option("levels", range, "single level or A..B");
  int jobs = 1;
  cmd_verify->add_option("--jobs", jobs, "worker threads for the sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help/usage
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  output_sink out{out_path, {}};
  try {
    if (cmd_verify->parsed()) {
      if (range.empty()) range = range_flag;
      if (range.empty()) {
        std::cerr << "verify needs a level or range\n";
        return 2;
      }
      return run_verify(range, jobs, out);
    }

    if (cmd_render->parsed()) {
      if (!range_flag.empty()) {
        std::cerr << "render takes a single level\n";
        return 2;
      }
      ropt.labels = !no_labels;
      const gamma0fd::coset_table t = gamma0fd::build_cosets(gamma0fd::modulus(level));
      out.stream() << gamma0fd::render_svg(t, gamma0fd::glue(t), ropt);
      out.stream().flush();
      return 0;
    }

    // The JSON commands take one level or a --range sweep, one document
    // per level.
    i64 first = level, last = level;
    if (!range_flag.empty()) {
      std::tie(first, last) = parse_range(range_flag);
    } else if (level == 0) {
      std::cerr << "missing level: pass N or --range A..B\n";
      return 2;
    }
    for (i64 nv = first; nv <= last; ++nv) {
      const gamma0fd::modulus n(nv);
      if (cmd_wtable->parsed()) {
        out.stream() << gamma0fd::width_json(n) << "\n";
      } else if (cmd_cosets->parsed()) {
        out.stream() << gamma0fd::cosets_json(gamma0fd::build_cosets(n)) << "\n";
      } else if (cmd_cusps->parsed()) {
        out.stream() << gamma0fd::cusps_json(gamma0fd::build_cosets(n)) << "\n";
      } else if (cmd_arcs->parsed()) {
        out.stream() << gamma0fd::arcs_json(gamma0fd::build_cosets(n)) << "\n";
      } else if (cmd_gluing->parsed()) {
        out.stream() << gamma0fd::gluing_json(gamma0fd::build_cosets(n)) << "\n";
      } else if (cmd_genus->parsed()) {
        out.stream() << gamma0fd::genus_json(gamma0fd::build_cosets(n)) << "\n";
      }
      out.stream().flush();  // one full document per line, streamed
    }
  } catch (const gamma0fd::invalid_modulus& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
