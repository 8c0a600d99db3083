// Copyright 2026 The tactslip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tactslip: command-line front end for the slip-estimation pipeline.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frame_source.hpp"
#include "tactslip/config.hpp"
#include "tactslip/error.hpp"
#include "tactslip/metrics.hpp"
#include "tactslip/pgm.hpp"
#include "tactslip/pipeline.hpp"
#include "tactslip/synth.hpp"
#include "tactslip/tracker.hpp"

namespace tactslip::cli {
namespace {

namespace fs = std::filesystem;

enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kConfig = 2,
  kIo = 3,
  kDegenerate = 4,
  kThreshold = 5,
};

struct GlobalOptions {
  std::string config_path;
  std::string estimator;
  bool print_config = false;
};

PipelineConfig load_config(const GlobalOptions& g) {
  PipelineConfig config;
  if (!g.config_path.empty()) {
    std::ifstream in(g.config_path, std::ios::binary);
    if (!in) throw IoError("cannot read config " + g.config_path);
    std::ostringstream text;
    text << in.rdbuf();
    config = PipelineConfig::from_manifest(Manifest::parse(text.str()));
  }
  if (!g.estimator.empty()) config.estimator = parse_estimator(g.estimator);
  config.validate();
  return config;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw IoError("cannot write " + path.string());
}

// ---------------------------------------------------------------- segment

struct SegmentArgs {
  std::string input;
  std::string reference;
  std::string out;
};

int run_segment(const SegmentArgs& a, const PipelineConfig& config) {
  const GrayFrame ref = pgm::read_frame(fs::path(a.reference));
  if (fs::is_directory(a.input)) {
    const auto frames = list_frames(a.input);
    if (frames.empty()) throw IoError("no frames in " + a.input);
    ensure_dir(a.out);
    for (const FrameFile& f : frames) {
      const BinaryMask m =
          segment_diff(pgm::read_frame(f.path), ref, config.segment);
      pgm::write_mask(fs::path(a.out) / f.path.filename(), m);
    }
    std::cerr << "segmented " << frames.size() << " frames\n";
  } else {
    pgm::write_mask(a.out, segment_diff(pgm::read_frame(fs::path(a.input)), ref,
                                        config.segment));
  }
  return kOk;
}

// ------------------------------------------------------------------ angle

int run_angle(const std::vector<std::string>& masks, const PipelineConfig& config) {
  std::cout << "file,angle_deg,elongation,valid\n";
  for (const std::string& path : masks) {
    const BinaryMask region =
        largest_component(pgm::read_mask(path), Connectivity::Eight);
    const AngleEstimate e =
        estimate_orientation(region, config.estimator, config.orientation);
    std::cout << path << ',' << format_fixed3(e.angle_deg) << ','
              << format_fixed3(e.elongation) << ',' << (e.valid ? 1 : 0) << '\n';
  }
  return kOk;
}

// ------------------------------------------------------------------ track

struct TrackArgs {
  std::string input;
  std::string reference;
  std::string out;
  bool batch = false;
  bool from_stdin = false;
};

std::optional<GrayFrame> find_reference(const fs::path& dir,
                                        const std::string& explicit_ref) {
  if (!explicit_ref.empty()) return pgm::read_frame(fs::path(explicit_ref));
  const fs::path implicit = dir / kReferenceFile;
  if (fs::exists(implicit)) return pgm::read_frame(implicit);
  return std::nullopt;
}

SlipTrack track_directory(const fs::path& dir, const std::string& explicit_ref,
                          const PipelineConfig& config) {
  const auto frames = list_frames(dir);
  if (frames.empty()) throw IoError("no frames in " + dir.string());
  const auto ref = find_reference(dir, explicit_ref);
  SlipPipeline pipeline(config);
  if (ref) pipeline.set_reference(*ref);
  for (const FrameFile& f : frames) {
    if (ref) {
      pipeline.push_frame(pgm::read_frame(f.path), f.index);
    } else {
      pipeline.push_mask(pgm::read_mask(f.path), f.index);
    }
  }
  return pipeline.track();
}

void print_summary(std::ostream& out, const SlipTrack& track) {
  const TrackSummary s = summarize(track);
  out << "frames=" << s.frames << " invalid=" << s.invalid_frames
      << " final_slip_deg=" << format_fixed3(s.final_slip_deg) << '\n';
}

int run_track_stream(const TrackArgs& a, const PipelineConfig& config) {
  std::optional<GrayFrame> ref;
  if (!a.reference.empty()) ref = pgm::read_frame(fs::path(a.reference));
  SlipPipeline pipeline(config);
  if (ref) pipeline.set_reference(*ref);
  std::cout << track_csv_header() << std::endl;
  std::uint64_t index = 0;
  while (auto frame = read_stream_frame(std::cin)) {
    const SlipSample& s = ref ? pipeline.push_frame(*frame, index)
                              : pipeline.push_mask(pgm::to_mask(*frame), index);
    std::cout << track_csv_row(s) << std::endl;
    ++index;
  }
  if (!pipeline.started()) throw IoError("no frames on standard input");
  print_summary(std::cerr, pipeline.track());
  return kOk;
}

int run_track_batch(const TrackArgs& a, const PipelineConfig& config) {
  if (a.out.empty()) throw InvalidArgument("--batch needs --out <directory>");
  const auto trials = list_subdirs(a.input);
  if (trials.empty()) throw IoError("no trial directories in " + a.input);
  ensure_dir(a.out);
  int code = kOk;
  std::cout << "trial,frames,invalid_frames,final_slip_deg\n";
  for (const fs::path& dir : trials) {
    const std::string name = dir.filename().string();
    try {
      const SlipTrack track = track_directory(dir, a.reference, config);
      write_track_csv(fs::path(a.out) / (name + ".csv"), track);
      const TrackSummary s = summarize(track);
      std::cout << name << ',' << s.frames << ',' << s.invalid_frames << ','
                << format_fixed3(s.final_slip_deg) << '\n';
    } catch (const DegenerateContact& e) {
      std::cerr << name << ": " << e.what() << '\n';
      code = kDegenerate;
    }
  }
  return code;
}

int run_track(const TrackArgs& a, const PipelineConfig& config) {
  if (a.from_stdin) return run_track_stream(a, config);
  if (a.input.empty()) throw InvalidArgument("track needs an input directory or --stdin");
  if (a.batch) return run_track_batch(a, config);
  const SlipTrack track = track_directory(a.input, a.reference, config);
  if (a.out.empty()) {
    write_track_csv(std::cout, track);
  } else {
    write_track_csv(fs::path(a.out), track);
  }
  print_summary(std::cerr, track);
  return kOk;
}

// --------------------------------------------------------------- eval-seg

struct EvalSegArgs {
  std::string pred;
  std::string truth;
  double min_dice = -1.0;
};

std::map<std::string, fs::path> pgm_files(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("not a directory: " + dir.string());
  std::map<std::string, fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
      files[entry.path().filename().string()] = entry.path();
    }
  }
  return files;
}

template <typename Map>
void require_matching(const Map& pred, const Map& truth) {
  std::vector<std::string> offenders;
  for (const auto& [name, _] : pred) {
    if (!truth.contains(name)) offenders.push_back(name + " (no truth)");
  }
  for (const auto& [name, _] : truth) {
    if (!pred.contains(name)) offenders.push_back(name + " (no prediction)");
  }
  if (offenders.empty()) return;
  std::string msg = "unmatched inputs:";
  for (const auto& o : offenders) msg += "\n  " + o;
  throw InvalidArgument(msg);
}

int run_eval_seg(const EvalSegArgs& a) {
  const auto pred = pgm_files(a.pred);
  const auto truth = pgm_files(a.truth);
  if (pred.empty()) throw InvalidArgument("no prediction masks in " + a.pred);
  require_matching(pred, truth);
  std::vector<double> dice, iou;
  std::cout << "pair,dice,iou\n";
  char buf[64];
  for (const auto& [name, path] : pred) {
    const SegScore s = dice_iou(pgm::read_mask(path), pgm::read_mask(truth.at(name)));
    dice.push_back(s.dice);
    iou.push_back(s.iou);
    std::snprintf(buf, sizeof buf, "%.6f,%.6f", s.dice, s.iou);
    std::cout << name << ',' << buf << '\n';
  }
  const MeanStd d = mean_std(dice), j = mean_std(iou);
  std::cout << "dice " << format_fixed3(d.mean) << " +- " << format_fixed3(d.std) << '\n'
            << "iou " << format_fixed3(j.mean) << " +- " << format_fixed3(j.std) << '\n';
  if (a.min_dice >= 0.0 && d.mean < a.min_dice) {
    std::cerr << "mean dice " << d.mean << " is below " << a.min_dice << '\n';
    return kThreshold;
  }
  return kOk;
}

// -------------------------------------------------------------- eval-slip

struct EvalSlipArgs {
  std::string pred;
  std::string truth;
  double max_mean_deg = -1.0;
  double max_final_deg = -1.0;
};

// Trial name -> CSV path. A directory yields "<trial>.csv" files and, for
// truth, "<trial>/truth.csv" campaign folders.
std::map<std::string, fs::path> csv_inputs(const fs::path& path, bool truth) {
  std::map<std::string, fs::path> out;
  std::error_code ec;
  if (fs::is_regular_file(path, ec)) {
    out[path.stem().string()] = path;
    return out;
  }
  if (!fs::is_directory(path, ec)) throw IoError("cannot read " + path.string());
  for (const auto& entry : fs::directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") {
      out[entry.path().stem().string()] = entry.path();
    } else if (truth && entry.is_directory() &&
               fs::exists(entry.path() / "truth.csv")) {
      out[entry.path().filename().string()] = entry.path() / "truth.csv";
    }
  }
  return out;
}

int run_eval_slip(const EvalSlipArgs& a) {
  auto pred = csv_inputs(a.pred, false);
  auto truth = csv_inputs(a.truth, true);
  if (pred.empty()) throw InvalidArgument("no prediction tracks in " + a.pred);
  // Two single files are compared directly, whatever their names.
  if (pred.size() == 1 && truth.size() == 1 && fs::is_regular_file(a.truth)) {
    truth = {{pred.begin()->first, truth.begin()->second}};
  }
  require_matching(pred, truth);

  std::vector<TrialResult> results;
  std::cout << "trial,label,frames,mean_abs_deg,std_deg,final_abs_deg\n";
  for (const auto& [name, path] : pred) {
    TrialResult r;
    r.name = name;
    r.label = label_of(name);
    r.track = read_track_csv(path);
    r.error = rotational_error(r.track, read_truth_csv(truth.at(name)));
    std::cout << name << ',' << r.label << ',' << r.error.per_frame_abs_deg.size()
              << ',' << format_fixed3(r.error.mean_abs_deg) << ','
              << format_fixed3(r.error.std_deg) << ','
              << format_fixed3(r.error.final_abs_deg) << '\n';
    results.push_back(std::move(r));
  }
  const CampaignSummary s = summarize_campaign(results);
  std::cout << "\nlabel,trials,per_frame_mean_deg,per_frame_std_deg,"
               "final_mean_deg,final_std_deg\n";
  int code = kOk;
  auto row = [&](const std::string& label, std::size_t trials, const MeanStd& pf,
                 const MeanStd& fin) {
    std::cout << label << ',' << trials << ',' << format_fixed3(pf.mean) << ','
              << format_fixed3(pf.std) << ',' << format_fixed3(fin.mean) << ','
              << format_fixed3(fin.std) << '\n';
  };
  for (const LabelSummary& l : s.labels) {
    row(l.label, l.trials, l.per_frame, l.final_angle);
    if ((a.max_mean_deg >= 0.0 && l.per_frame.mean > a.max_mean_deg) ||
        (a.max_final_deg >= 0.0 && l.final_angle.mean > a.max_final_deg)) {
      std::cerr << l.label << " exceeds the error budget\n";
      code = kThreshold;
    }
  }
  row("overall", results.size(), s.per_frame, s.final_angle);
  return code;
}

// ------------------------------------------------------------------ synth

struct SynthArgs {
  std::string out;
  bool campaign = false;
  int trials = 5;
  std::string kind = "capsule";
  double length = 60.0;
  double width = 20.0;
  std::optional<double> center_x;
  std::optional<double> center_y;
  int canvas_width = 320;
  int canvas_height = 240;
  double start = 0.0;
  double stop = 40.0;
  double step = 1.0;
  double noise = 0.0;
  double salt_pepper = 0.0;
  std::uint64_t seed = 0;
  bool grayscale = false;
  int delta = 60;
};

std::string frame_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "frame_%04zu.pgm", i);
  return buf;
}

void write_sequence(const fs::path& dir, const synth::SequenceSpec& spec,
                    bool grayscale, int delta) {
  ensure_dir(dir);
  const auto frames = synth::gen_sequence(spec);
  std::optional<GrayFrame> ref;
  if (grayscale) {
    ref = synth::render_reference(spec.shape.canvas_width, spec.shape.canvas_height);
    pgm::write_frame(dir / kReferenceFile, *ref);
  }
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (ref) {
      pgm::write_frame(dir / frame_name(i),
                       synth::render_contact(*ref, frames[i].mask, delta));
    } else {
      pgm::write_mask(dir / frame_name(i), frames[i].mask);
    }
  }
  write_truth_csv(dir / "truth.csv", truth_from_schedule(spec.schedule));
  Manifest m = synth::to_manifest(spec);
  if (grayscale) m.set("contact_delta", std::to_string(delta));
  write_text(dir / "manifest.txt", m.str());
}

int run_synth(const SynthArgs& a) {
  if (a.campaign) {
    for (const synth::Trial& t : synth::standard_campaign(a.noise, a.trials)) {
      write_sequence(fs::path(a.out) / t.name(), t.sequence, a.grayscale, a.delta);
    }
    return kOk;
  }
  synth::SequenceSpec spec;
  spec.shape = synth::ShapeSpec::centered(synth::parse_shape_kind(a.kind), a.length,
                                          a.width, a.start, a.canvas_width,
                                          a.canvas_height);
  if (a.center_x) spec.shape.center_x = *a.center_x;
  if (a.center_y) spec.shape.center_y = *a.center_y;
  spec.schedule = synth::linear_schedule(a.start, a.stop, a.step);
  spec.boundary_noise_p = a.noise;
  spec.salt_pepper_p = a.salt_pepper;
  spec.seed = a.seed;
  write_sequence(a.out, spec, a.grayscale, a.delta);
  return kOk;
}

// ------------------------------------------------------------------ bench

struct BenchArgs {
  int width = 320;
  int height = 240;
  int repetitions = 100;
  int warmup = 10;
  double max_median_ms = -1.0;
};

int run_bench(const BenchArgs& a, const PipelineConfig& config) {
  const BenchReport r = run_pipeline_bench(
      a.width, a.height, TimingOptions{a.repetitions, a.warmup}, config);
  std::cout << "frame " << r.width << "x" << r.height << ", " << a.repetitions
            << " repetitions after " << a.warmup << " warm-up runs\n"
            << "stage,median_ms,mean_ms,std_ms\n";
  for (const StageTiming& s : r.stages) {
    std::cout << s.stage << ',' << format_fixed3(1e3 * s.median_s) << ','
              << format_fixed3(1e3 * s.mean_s) << ',' << format_fixed3(1e3 * s.std_s)
              << '\n';
  }
  const double median_ms = 1e3 * r.end_to_end().median_s;
  if (a.max_median_ms >= 0.0 && median_ms > a.max_median_ms) {
    std::cerr << "end_to_end median " << format_fixed3(median_ms)
              << " ms exceeds " << a.max_median_ms << " ms\n";
    return kThreshold;
  }
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Rotational slip estimation from tactile contact masks."};
  app.name("tactslip");
  GlobalOptions g;
  app.add_option("--config", g.config_path, "Pipeline configuration manifest");
  app.add_option("--estimator", g.estimator, "skeleton, pca or ellipse");
  app.add_flag("--print-config", g.print_config,
               "Print the effective configuration and exit");
  app.require_subcommand(0, 1);

  SegmentArgs seg;
  auto* segment = app.add_subcommand("segment", "Contact mask from frame differencing");
  segment->add_option("input", seg.input, "Frame file or directory")->required();
  segment->add_option("--reference", seg.reference, "No-contact frame")->required();
  segment->add_option("-o,--out", seg.out, "Output mask file or directory")->required();

  std::vector<std::string> angle_masks;
  auto* angle = app.add_subcommand("angle", "Orientation of mask files");
  angle->add_option("masks", angle_masks, "Mask PGM files")->required();

  TrackArgs tr;
  auto* track = app.add_subcommand("track", "Track slip over a frame sequence");
  track->add_option("input", tr.input, "Frame directory (or trial root with --batch)");
  track->add_option("--reference", tr.reference,
                    "No-contact frame; frames are then raw and get segmented");
  track->add_option("-o,--out", tr.out, "Track CSV (directory with --batch)");
  track->add_flag("--batch", tr.batch, "Process every trial subdirectory");
  track->add_flag("--stdin", tr.from_stdin,
                  "Read length-prefixed PGM frames from standard input");

  EvalSegArgs es;
  auto* eval_seg = app.add_subcommand("eval-seg", "Dice and IoU of predicted masks");
  eval_seg->add_option("pred", es.pred, "Predicted mask directory")->required();
  eval_seg->add_option("truth", es.truth, "Ground-truth mask directory")->required();
  eval_seg->add_option("--min-dice", es.min_dice, "Fail below this mean Dice");

  EvalSlipArgs el;
  auto* eval_slip = app.add_subcommand("eval-slip", "Rotational error of slip tracks");
  eval_slip->add_option("pred", el.pred, "Track CSV or directory of them")->required();
  eval_slip->add_option("truth", el.truth, "Truth CSV, directory or campaign root")
      ->required();
  eval_slip->add_option("--max-mean-deg", el.max_mean_deg,
                        "Fail if a label's mean per-frame error exceeds this");
  eval_slip->add_option("--max-final-deg", el.max_final_deg,
                        "Fail if a label's mean final-angle error exceeds this");

  SynthArgs sy;
  auto* synth_cmd = app.add_subcommand("synth", "Generate synthetic contact sequences");
  synth_cmd->add_option("-o,--out", sy.out, "Output directory")->required();
  synth_cmd->add_flag("--campaign", sy.campaign, "Write the standard 9-shape campaign");
  synth_cmd->add_option("--trials", sy.trials, "Trials per shape in a campaign");
  synth_cmd->add_option("--kind", sy.kind, "capsule, rectangle, ellipse or disc");
  synth_cmd->add_option("--length", sy.length);
  synth_cmd->add_option("--width", sy.width);
  synth_cmd->add_option("--center-x", sy.center_x);
  synth_cmd->add_option("--center-y", sy.center_y);
  synth_cmd->add_option("--canvas-width", sy.canvas_width);
  synth_cmd->add_option("--canvas-height", sy.canvas_height);
  synth_cmd->add_option("--start", sy.start, "First angle, degrees");
  synth_cmd->add_option("--stop", sy.stop, "Last angle, degrees");
  synth_cmd->add_option("--step", sy.step, "Angle increment, degrees");
  synth_cmd->add_option("--noise", sy.noise, "Boundary flip probability");
  synth_cmd->add_option("--salt-pepper", sy.salt_pepper, "Global flip probability");
  synth_cmd->add_option("--seed", sy.seed);
  synth_cmd->add_flag("--grayscale", sy.grayscale,
                      "Write raw frames plus reference.pgm instead of masks");
  synth_cmd->add_option("--delta", sy.delta, "Contact brightness offset");

  BenchArgs be;
  auto* bench = app.add_subcommand("bench", "Per-stage latency on a synthetic frame");
  bench->add_option("--width", be.width);
  bench->add_option("--height", be.height);
  bench->add_option("--repetitions", be.repetitions)->check(CLI::PositiveNumber);
  bench->add_option("--warmup", be.warmup)->check(CLI::NonNegativeNumber);
  bench->add_option("--max-median-ms", be.max_median_ms,
                    "Fail if the end-to-end median exceeds this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  PipelineConfig config;
  try {
    config = load_config(g);
  } catch (const IoError& e) {
    std::cerr << "tactslip: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    std::cerr << "tactslip: config: " << e.what() << '\n';
    return kConfig;
  }
  if (g.print_config) {
    std::cout << config.to_manifest().str();
    return kOk;
  }

  if (segment->parsed()) return run_segment(seg, config);
  if (angle->parsed()) return run_angle(angle_masks, config);
  if (track->parsed()) return run_track(tr, config);
  if (eval_seg->parsed()) return run_eval_seg(es);
  if (eval_slip->parsed()) return run_eval_slip(el);
  if (synth_cmd->parsed()) return run_synth(sy);
  if (bench->parsed()) return run_bench(be, config);
  std::cerr << app.help();
  return kConfig;
}

}  // namespace
}  // namespace tactslip::cli

int main(int argc, char** argv) {
  using namespace tactslip;
  using namespace tactslip::cli;
  try {
    return run(argc, argv);
  } catch (const DegenerateContact& e) {
    std::cerr << "tactslip: " << e.what() << '\n';
    return kDegenerate;
  } catch (const IoError& e) {
    std::cerr << "tactslip: " << e.what() << '\n';
    return kIo;
  } catch (const InvalidArgument& e) {
    std::cerr << "tactslip: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "tactslip: " << e.what() << '\n';
    return kOther;
  }
}
