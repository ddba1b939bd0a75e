#include "zenocat/cli_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "zenocat/dynamics.hpp"
#include "zenocat/emit.hpp"
#include "zenocat/errors.hpp"
#include "zenocat/verify.hpp"

namespace zenocat::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::string> config_comments(const RunConfig& cfg, const std::string& subcmd) {
    std::vector<std::string> lines{"zenocat " + subcmd, "resolved configuration:"};
    std::istringstream in(cfg.to_text());
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back("  " + line);
    return lines;
}

std::string tag_for(double r) {
    std::string s = "r" + emit::format_sig(r, 6);
    std::replace(s.begin(), s.end(), '.', 'p');
    return s;
}

// parity contrast of the evolving cat via the phase-space origin value
double contrast(const EvolutionKernels& k, const CatState& cat, double t) {
    return 0.5 * M_PI * analytic_wigner({0.0, 0.0}, t, k, cat);
}

// time at which the decaying part of the contrast has fallen to 10%
double contrast_decade_time(const EvolutionKernels& k, const CatState& cat) {
    const double c0 = contrast(k, cat, 0.0);
    const double nbar = k.rates.gamma_minus / std::max(k.b_tau(), 1e-300);
    const double cinf = 1.0 / (2.0 * nbar + 1.0);
    const double target = cinf + 0.1 * (c0 - cinf);
    double hi = 1.0 / std::max(k.b_tau(), 1e-12);
    for (int i = 0; i < 200 && contrast(k, cat, hi) > target; ++i) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (contrast(k, cat, mid) > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double decoherence_time(const ReservoirSpec& spec, double alpha) {
    const RateSet mk = markov_rates(spec);
    const double rate = 2.0 * mk.markov_minus * (1.0 + 2.0 * alpha * alpha);
    if (!(rate > 0.0)) {
        const double g = markov_gamma_scale(spec);
        return 1.0 / (g * (1.0 + 2.0 * alpha * alpha));
    }
    return 1.0 / rate;
}

FileSet cmd_rates(const RunConfig& cfg) {
    std::vector<double> rv = cfg.r_values;
    std::sort(rv.begin(), rv.end());
    const std::vector<double> grid =
        verify::log_grid(cfg.tau_min, cfg.tau_max, cfg.tau_points);

    struct Row {
        double r, wct, tau, gp, gm, mp, mm, analytic, relerr;
    };
    std::vector<Row> rows(rv.size() * grid.size());
    emit::parallel_for(rows.size(), cfg.threads, [&](std::size_t idx) {
        const double r = rv[idx / grid.size()];
        const double wct = grid[idx % grid.size()];
        const ReservoirSpec spec = cfg.reservoir(r);
        const double tau = wct / spec.omega_c;
        const RateSet a = measured_rates(tau, spec);
        const RateSet b = rates_by_time_average(tau, spec);
        const double rel = std::max(verify::rel_err(b.gamma_plus, a.gamma_plus),
                                    verify::rel_err(b.gamma_minus, a.gamma_minus));
        double analytic = std::numeric_limits<double>::quiet_NaN();
        if (spec.thermal_kind == ThermalKind::ConstantN)
            analytic = analytic_gamma_minus(tau, spec);
        rows[idx] = {r, wct, tau, a.gamma_plus, a.gamma_minus,
                     a.markov_plus, a.markov_minus, analytic, rel};
    });

    emit::CsvTable csv({"r", "omega_c_tau", "tau", "gamma_plus", "gamma_minus",
                        "markov_plus", "markov_minus", "analytic_gamma_minus",
                        "rel_err_identity"},
                       config_comments(cfg, "rates"));
    for (const auto& w : rows)
        csv.add_row(csv.make_row(
            {w.r, w.wct, w.tau, w.gp, w.gm, w.mp, w.mm, w.analytic, w.relerr}));

    FileSet out{{"rates.csv", csv.to_string()}};
    if (cfg.svg) {
        for (double r : rv) {
            emit::Series sp, sm;
            sp.label = "gamma_minus / markov";
            sm.label = "analytic / markov";
            for (const auto& w : rows) {
                if (w.r != r) continue;
                sp.x.push_back(w.wct);
                sp.y.push_back(w.gm / w.mm);
                if (!std::isnan(w.analytic)) {
                    sm.x.push_back(w.wct);
                    sm.y.push_back(w.analytic / w.mm);
                }
            }
            std::vector<emit::Series> series{sp};
            if (!sm.x.empty()) series.push_back(sm);
            out.emplace_back("rates_" + tag_for(r) + ".svg",
                             emit::svg_line_chart("upward rate vs interruption interval (" +
                                                      tag_for(r) + ")",
                                                  "omega_c tau", "rate / markov", series));
        }
    }
    return out;
}

FileSet cmd_wigner_peak(const RunConfig& cfg) {
    const CatState cat = CatState::make(cfg.alpha);
    std::vector<double> rv = cfg.wigner_r_panels;
    std::sort(rv.begin(), rv.end());
    std::vector<double> curves = cfg.omega_c_tau;  // plus the markov reference
    std::sort(curves.begin(), curves.end());
    curves.push_back(kInf);

    emit::CsvTable csv({"r", "omega_c_tau", "scenario", "t", "t_over_tdec",
                        "w_peak_norm", "log_w_peak_norm", "w_peak_raw"},
                       config_comments(cfg, "wigner-peak"));
    FileSet out;

    struct Curve {
        double r, wct;
        std::vector<double> t, norm, lognorm, raw;
    };
    std::vector<Curve> all(rv.size() * curves.size());
    emit::parallel_for(all.size(), cfg.threads, [&](std::size_t idx) {
        const double r = rv[idx / curves.size()];
        const double wct = curves[idx % curves.size()];
        const ReservoirSpec spec = cfg.reservoir(r);
        const EvolutionKernels k =
            std::isinf(wct)
                ? EvolutionKernels::markov(spec)
                : EvolutionKernels::from_rates(measured_rates(wct / spec.omega_c, spec));
        const double tdec = decoherence_time(spec, cfg.alpha);
        const double tmax = cfg.t_max_decades * tdec;
        Curve c;
        c.r = r;
        c.wct = wct;
        for (int i = 0; i < cfg.samples; ++i) {
            const double t = tmax * static_cast<double>(i) / (cfg.samples - 1);
            const double lg = log_wigner_peak_ratio(t, k, cat);
            c.t.push_back(t);
            c.lognorm.push_back(lg);
            c.norm.push_back(std::exp(lg));
            c.raw.push_back(wigner_peak(t, k, cat, PeakMode::Exact));
        }
        all[idx] = std::move(c);
    });

    for (const auto& c : all) {
        const ReservoirSpec spec = cfg.reservoir(c.r);
        const double tdec = decoherence_time(spec, cfg.alpha);
        const std::string scen = std::isinf(c.wct) ? "markov" : "shuttered";
        for (std::size_t i = 0; i < c.t.size(); ++i) {
            auto cells = csv.make_row({c.r, c.wct, 0.0, c.t[i], c.t[i] / tdec,
                                       c.norm[i], c.lognorm[i], c.raw[i]});
            cells[2] = scen;
            csv.add_row(cells);
        }
    }
    out.emplace_back("wigner_peak.csv", csv.to_string());

    if (cfg.svg) {
        for (double r : rv) {
            std::vector<emit::Series> series;
            for (const auto& c : all) {
                if (c.r != r) continue;
                emit::Series s;
                s.label = std::isinf(c.wct)
                              ? "markov"
                              : "omega_c_tau=" + emit::format_sig(c.wct, 6);
                const double tdec = decoherence_time(cfg.reservoir(r), cfg.alpha);
                s.x = c.t;
                for (auto& xv : s.x) xv /= tdec;
                s.y = c.norm;
                series.push_back(std::move(s));
            }
            out.emplace_back("wigner_peak_" + tag_for(r) + ".svg",
                             emit::svg_line_chart("interference peak decay (" + tag_for(r) + ")",
                                                  "t / t_dec", "W_peak(t)/W_peak(0)", series));
        }
    }
    return out;
}

FileSet cmd_pn_snapshots(const RunConfig& cfg) {
    const CatState cat = CatState::make(cfg.alpha);
    std::vector<double> rv = cfg.wigner_r_panels;
    std::sort(rv.begin(), rv.end());
    const double wct = *std::min_element(cfg.omega_c_tau.begin(), cfg.omega_c_tau.end());

    emit::CsvTable csv({"scenario", "r", "omega_c_tau", "t", "t_over_tdecade", "n", "p_n",
                        "parity_contrast"},
                       config_comments(cfg, "pn-snapshots"));
    FileSet out;
    FileSet svgs;

    for (double r : rv) {
        const ReservoirSpec spec = cfg.reservoir(r);
        const EvolutionKernels none = EvolutionKernels::markov(spec);
        const EvolutionKernels shut =
            EvolutionKernels::from_rates(measured_rates(wct / spec.omega_c, spec));
        const double tdecade = contrast_decade_time(none, cat);
        struct Scen {
            const char* name;
            const EvolutionKernels* k;
            double wct;
        };
        for (const Scen& sc : {Scen{"none", &none, kInf}, Scen{"shuttered", &shut, wct}}) {
            for (double frac : cfg.pn_snapshot_fractions) {
                const double t = frac * tdecade;
                std::vector<double> pn(cfg.pn_max_n + 1);
                for (int n = 0; n <= cfg.pn_max_n; ++n)
                    pn[n] = pn_closed_form(n, t, *sc.k, cat);
                // contrast over the full distribution, not just the plotted head
                const double c = contrast(*sc.k, cat, t);
                for (int n = 0; n <= cfg.pn_max_n; ++n) {
                    auto cells = csv.make_row({0.0, r, sc.wct, t, frac,
                                               static_cast<double>(n), pn[n], c});
                    cells[0] = sc.name;
                    csv.add_row(cells);
                }
                if (cfg.svg) {
                    std::ostringstream nm;
                    nm << "pn_" << sc.name << "_" << tag_for(r) << "_f"
                       << emit::format_sig(frac, 3) << ".svg";
                    std::string fname = nm.str();
                    std::replace(fname.begin() + 3, fname.end() - 4, '.', 'p');
                    svgs.emplace_back(
                        fname, emit::svg_bar_chart("P_n at t/t_decade=" +
                                                       emit::format_sig(frac, 3) + " (" +
                                                       sc.name + ", " + tag_for(r) + ")",
                                                   "n", "P_n", pn));
                }
            }
        }
    }
    out.emplace_back("pn_snapshots.csv", csv.to_string());
    for (auto& f : svgs) out.push_back(std::move(f));
    return out;
}

FileSet cmd_wigner_field(const RunConfig& cfg) {
    const CatState cat = CatState::make(cfg.alpha);
    const ReservoirSpec spec = cfg.reservoir();
    const double wct = *std::min_element(cfg.omega_c_tau.begin(), cfg.omega_c_tau.end());
    EvolutionKernels k = (cfg.scenario == "markov")
                             ? EvolutionKernels::markov(spec)
                             : EvolutionKernels::from_rates(
                                   measured_rates(wct / spec.omega_c, spec));
    const double tdec = decoherence_time(spec, cfg.alpha);

    emit::CsvTable csv({"t", "beta_r", "beta_i", "w"},
                       config_comments(cfg, "wigner-field"));
    for (double t : {0.0, tdec}) {
        const WignerField f =
            wigner_field(t, k, cat, static_cast<std::size_t>(cfg.wigner_n_grid));
        for (std::size_t ir = 0; ir < f.nr; ++ir) {
            const double br = f.beta_r_min + f.h * static_cast<double>(ir);
            for (std::size_t ii = 0; ii < f.ni; ++ii) {
                const double bi = f.beta_i_min + f.h * static_cast<double>(ii);
                csv.add_row(csv.make_row({t, br, bi, f.at(ir, ii)}));
            }
        }
    }
    return {{"wigner_field.csv", csv.to_string()}};
}

}  // namespace zenocat::cli
