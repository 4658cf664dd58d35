#include "emovae/corpus/synthetic.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "emovae/corpus/manifest.hpp"
#include "emovae/dsp/wav.hpp"
#include "emovae/error.hpp"
#include "emovae/numeric/rng.hpp"

namespace emovae {

namespace {

struct ClassProfile {
  const char* name;
  double f0_hz;        // fundamental before speaker offset
  double tilt;         // harmonic amplitude = h^(-tilt)
  double am_rate_hz;   // amplitude-modulation rate
  double arousal, power, valence;  // dimensional bases
};

// One audible signature per kept emotion class, plus the dimensional bases
// the annotations are jittered around.
constexpr std::array<ClassProfile, 4> kProfiles{{
    {"neutral", 120.0, 1.0, 2.0, 3.0, 3.0, 3.0},
    {"happiness", 240.0, 0.7, 6.0, 3.8, 3.4, 4.2},
    {"sadness", 80.0, 1.6, 1.0, 2.0, 2.2, 1.8},
    {"anger", 170.0, 0.4, 9.0, 4.2, 4.2, 1.8},
}};

constexpr double kMaxHarmonicHz = 6000.0;
constexpr double kAmDepth = 0.5;
constexpr double kSpeakerPitchStepHz = 4.0;
constexpr double kUtterancePitchJitterHz = 3.0;

std::string format_one_decimal(double v) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

WaveBuffer synthesize_utterance(const ClassProfile& profile,
                                double speaker_offset_hz,
                                const SyntheticConfig& cfg, RngStream& rng) {
  const double duration =
      cfg.min_duration_s +
      rng.next_uniform() * (cfg.max_duration_s - cfg.min_duration_s);
  const double f0 = profile.f0_hz + speaker_offset_hz +
                    (2.0 * rng.next_uniform() - 1.0) * kUtterancePitchJitterHz;
  const double am_phase = rng.next_uniform() * 2.0 * std::numbers::pi;

  const std::size_t n_harmonics =
      static_cast<std::size_t>(kMaxHarmonicHz / f0);
  std::vector<double> amp(n_harmonics), phase(n_harmonics);
  for (std::size_t h = 0; h < n_harmonics; ++h) {
    amp[h] = std::pow(static_cast<double>(h + 1), -profile.tilt);
    phase[h] = rng.next_uniform() * 2.0 * std::numbers::pi;
  }

  WaveBuffer wave;
  wave.sample_rate = cfg.sample_rate;
  const auto n_samples = static_cast<std::size_t>(
      std::llround(duration * cfg.sample_rate));
  wave.samples.resize(n_samples);

  double sum_sq = 0.0;
  for (std::size_t n = 0; n < n_samples; ++n) {
    const double t = static_cast<double>(n) / cfg.sample_rate;
    double s = 0.0;
    for (std::size_t h = 0; h < n_harmonics; ++h) {
      s += amp[h] * std::sin(2.0 * std::numbers::pi * f0 * (h + 1) * t + phase[h]);
    }
    s *= 1.0 + kAmDepth * std::sin(2.0 * std::numbers::pi * profile.am_rate_hz * t +
                                   am_phase);
    wave.samples[n] = s;
    sum_sq += s * s;
  }
  const double rms = std::sqrt(sum_sq / static_cast<double>(n_samples));
  const double noise_sigma = rms / std::pow(10.0, cfg.noise_snr_db / 20.0);
  double peak = 0.0;
  for (double& s : wave.samples) {
    s += noise_sigma * rng.next_normal();
    peak = std::max(peak, std::abs(s));
  }
  const double gain = peak > 0.0 ? 0.5 / peak : 1.0;
  for (double& s : wave.samples) s *= gain;
  return wave;
}

}  // namespace

std::filesystem::path generate_synthetic_corpus(
    const SyntheticConfig& cfg, const std::filesystem::path& out_dir) {
  if (cfg.n_sessions < 2) throw ParameterError("synthetic corpus needs >= 2 sessions");
  if (cfg.speakers_per_session < 1 || cfg.utterances_per_speaker < 1) {
    throw ParameterError("synthetic corpus needs >= 1 speaker and utterance");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir / "wav", ec);
  if (ec) throw IoError("synthetic corpus: cannot create " + (out_dir / "wav").string());

  const std::size_t total_speakers = cfg.n_sessions * cfg.speakers_per_session;
  std::string manifest =
      "id,audio_path,session,speaker,dialogue_kind,label,arousal,power,valence\n";

  for (std::size_t session = 1; session <= cfg.n_sessions; ++session) {
    for (std::size_t sp = 0; sp < cfg.speakers_per_session; ++sp) {
      const std::size_t speaker_index =
          (session - 1) * cfg.speakers_per_session + sp;
      const double speaker_offset =
          (static_cast<double>(speaker_index) -
           static_cast<double>(total_speakers - 1) / 2.0) *
          kSpeakerPitchStepHz;
      char speaker_name[16];
      std::snprintf(speaker_name, sizeof(speaker_name), "spk%02zu", speaker_index);

      for (std::size_t u = 0; u < cfg.utterances_per_speaker; ++u) {
        const std::size_t cls = u % kProfiles.size();
        const ClassProfile& profile = kProfiles[cls];
        RngStream rng(mix_seed(cfg.seed, speaker_index, u));

        char id[48];
        std::snprintf(id, sizeof(id), "s%02zu_%s_u%03zu", session, speaker_name, u);
        const std::string wav_rel = std::string("wav/") + id + ".wav";

        const WaveBuffer wave =
            synthesize_utterance(profile, speaker_offset, cfg, rng);
        write_wav(out_dir / wav_rel, wave);

        // Jitter in 0.1 steps, at most +/-0.8; the first utterance of each
        // class per speaker is pinned to the base values.
        double dims[3] = {profile.arousal, profile.power, profile.valence};
        const bool first_of_class = u < kProfiles.size();
        for (double& d : dims) {
          if (!first_of_class) {
            d += 0.1 * (static_cast<double>(rng.next_below(17)) - 8.0);
          }
          d = std::clamp(d, 1.0, 5.0);
        }
        // Exercise the label merge: odd happiness utterances are "excited".
        std::string label = profile.name;
        if (cls == LabelMap::happiness() && (u / kProfiles.size()) % 2 == 1) {
          label = "excited";
        }
        const char* dialogue = (u % 2 == 0) ? "improvised" : "scripted";

        manifest += std::string(id) + "," + wav_rel + "," +
                    std::to_string(session) + "," + speaker_name + "," +
                    dialogue + "," + label + "," + format_one_decimal(dims[0]) +
                    "," + format_one_decimal(dims[1]) + "," +
                    format_one_decimal(dims[2]) + "\n";
      }
    }
  }

  const std::filesystem::path manifest_path = out_dir / "manifest.csv";
  {
    std::ofstream f(manifest_path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("synthetic corpus: cannot write " + manifest_path.string());
    f << manifest;
  }

  nlohmann::json meta;
  meta["seed"] = cfg.seed;
  meta["n_sessions"] = cfg.n_sessions;
  meta["speakers_per_session"] = cfg.speakers_per_session;
  meta["utterances_per_speaker"] = cfg.utterances_per_speaker;
  meta["sample_rate"] = cfg.sample_rate;
  meta["min_duration_s"] = cfg.min_duration_s;
  meta["max_duration_s"] = cfg.max_duration_s;
  meta["noise_snr_db"] = cfg.noise_snr_db;
  meta["am_depth"] = kAmDepth;
  meta["speaker_pitch_step_hz"] = kSpeakerPitchStepHz;
  meta["utterance_pitch_jitter_hz"] = kUtterancePitchJitterHz;
  meta["classes"] = nlohmann::json::array();
  for (const auto& p : kProfiles) {
    meta["classes"].push_back({{"name", p.name},
                               {"f0_hz", p.f0_hz},
                               {"tilt", p.tilt},
                               {"am_rate_hz", p.am_rate_hz},
                               {"arousal", p.arousal},
                               {"power", p.power},
                               {"valence", p.valence}});
  }
  {
    std::ofstream f(out_dir / "corpus_meta.json", std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("synthetic corpus: cannot write corpus_meta.json");
    f << meta.dump(2) << "\n";
  }
  return manifest_path;
}

}  // namespace emovae
