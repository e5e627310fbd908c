#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hmap/bohr.hpp"
#include "hmap/bounds.hpp"
#include "hmap/catalog.hpp"
#include "hmap/cli_util.hpp"
#include "hmap/invariance.hpp"
#include "hmap/json_io.hpp"
#include "hmap/numcheck.hpp"

namespace {

using nlohmann::json;

hmap::HarmonicMap load_map(const std::string& path) {
    json j;
    if (path == "-") {
        std::cin >> j;
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open '" + path + "'");
        in >> j;
    }
    return hmap::map_from_json(j);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<double> parse_radii(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::runtime_error("no radii given");
    return out;
}

void emit_series_csv(const hmap::PowerSeries& p) {
    std::cout << "n,c\n";
    for (int n = 0; n <= p.order(); ++n) {
        std::cout << n << "," << hmap::format_complex(p.coeff(n)) << "\n";
    }
}

void emit_map_csv(const hmap::HarmonicMap& f) {
    std::cout << "n,h,g\n";
    for (int n = 0; n <= f.h.order(); ++n) {
        std::cout << n << "," << hmap::format_complex(f.h.coeff(n)) << ","
                  << hmap::format_complex(f.g.coeff(n)) << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Truncated-series toolkit for stable classes of planar harmonic mappings"};
    app.require_subcommand(1);

    // catalog
    auto* cat = app.add_subcommand("catalog", "emit a named catalog function");
    std::string cat_name;
    int cat_order = hmap::kDefaultOrder;
    std::string cat_format = "json";
    int valpha_n = 3;
    std::string valpha_alpha = "0.2";
    cat->add_option("name", cat_name, "one of k, l, K, L, M, V")->required();
    cat->add_option("--order", cat_order, "truncation order");
    cat->add_option("--format", cat_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cat->add_option("--n", valpha_n, "V family: co-analytic starting degree (n >= 3)");
    cat->add_option("--alpha", valpha_alpha, "V family: coefficient alpha (complex)");

    // slice / rotate
    auto* slice = app.add_subcommand("slice", "analytic slice h + eps g of a map");
    std::string slice_path, slice_eps;
    slice->add_option("map", slice_path, "map JSON path or - for stdin")->required();
    slice->add_option("--eps", slice_eps, "complex eps (a+bi or r@theta)")->required();

    auto* rotate = app.add_subcommand("rotate", "epsilon-rotation h + conj(eps g) of a map");
    std::string rot_path, rot_eps;
    rotate->add_option("map", rot_path, "map JSON path or - for stdin")->required();
    rotate->add_option("--eps", rot_eps, "complex eps (a+bi or r@theta)")->required();

    // transform
    auto* transform = app.add_subcommand("transform", "affine or Koebe transform of a map");
    std::string tr_path, tr_affine, tr_auto;
    transform->add_option("map", tr_path, "map JSON path or - for stdin")->required();
    auto* opt_affine = transform->add_option("--affine", tr_affine, "affine parameter c (complex)");
    auto* opt_auto =
        transform->add_option("--auto", tr_auto, "disk automorphism 'a,theta' (a complex)");
    opt_affine->excludes(opt_auto);

    // bounds-check
    auto* bcheck = app.add_subcommand("bounds-check", "coefficient bounds against a class profile");
    std::string bc_path, bc_profile;
    int bc_upto = 32;
    bcheck->add_option("map", bc_path)->required();
    bcheck->add_option("--profile", bc_profile, "S_STAR, C_STAR, S_STABLE, C_STABLE")->required();
    bcheck->add_option("--upto", bc_upto, "highest coefficient degree checked");

    // growth-table
    auto* gtable = app.add_subcommand("growth-table", "growth envelope per radius");
    double gt_alpha = 3.0;
    std::string gt_radii;
    gtable->add_option("--alpha", gt_alpha)->required();
    gtable->add_option("--radii", gt_radii, "comma-separated radii")->required();

    // distortion-table
    auto* dtable = app.add_subcommand("distortion-table", "Jacobian/derivative bounds per radius");
    double dt_alpha = 2.5, dt_b1 = 0.0;
    std::string dt_radii, dt_variant = "order_envelope";
    dtable->add_option("--alpha", dt_alpha)->required();
    dtable->add_option("--b1", dt_b1, "|b1|");
    dtable->add_option("--radii", dt_radii, "comma-separated radii")->required();
    dtable->add_option("--variant", dt_variant)->check(CLI::IsMember({"order_envelope", "stable_min"}));

    // bohr-radius / bohr-check
    auto* bradius = app.add_subcommand("bohr-radius", "solve the Bohr radius of a profile");
    std::string br_profile;
    bradius->add_option("--profile", br_profile)->required();

    auto* bohrq = app.add_subcommand("bohr-check", "majorant sum against the covering distance");
    std::string bq_path, bq_profile;
    double bq_r = 0.1;
    bohrq->add_option("map", bq_path)->required();
    bohrq->add_option("--profile", bq_profile)->required();
    bohrq->add_option("--r", bq_r)->required();

    // stability-table
    auto* stab = app.add_subcommand("stability-table", "per-eps slice univalence/convexity scan");
    std::string st_path;
    int st_circle = 0, st_disk = 0;
    stab->add_option("map", st_path)->required();
    stab->add_option("--eps-circle", st_circle, "samples on the unit circle");
    stab->add_option("--eps-disk", st_disk, "samples inside the disk");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? 0 : 2;
    }

    if (cat->parsed()) {
        auto emit = [&](auto&& obj, auto&& csv_fn) {
            if (cat_format == "csv") {
                csv_fn(obj);
            } else {
                print_json(hmap::to_json(obj));
            }
        };
        if (cat_name == "k") emit(hmap::koebe_k(cat_order), emit_series_csv);
        else if (cat_name == "l") emit(hmap::half_plane_l(cat_order), emit_series_csv);
        else if (cat_name == "K") emit(hmap::harmonic_koebe_K(cat_order), emit_map_csv);
        else if (cat_name == "L") emit(hmap::harmonic_half_plane_L(cat_order), emit_map_csv);
        else if (cat_name == "M") emit(hmap::mapping_M(cat_order), emit_map_csv);
        else if (cat_name == "V")
            emit(hmap::v_alpha(valpha_n, hmap::parse_complex(valpha_alpha), cat_order),
                 emit_map_csv);
        else throw std::runtime_error("unknown catalog name '" + cat_name + "'");
        return 0;
    }
    if (slice->parsed()) {
        print_json(hmap::to_json(
            hmap::analytic_slice(load_map(slice_path), hmap::parse_complex(slice_eps))));
        return 0;
    }
    if (rotate->parsed()) {
        print_json(hmap::to_json(
            hmap::epsilon_rotate(load_map(rot_path), hmap::parse_complex(rot_eps))));
        return 0;
    }
    if (transform->parsed()) {
        const hmap::HarmonicMap f = load_map(tr_path);
        if (opt_affine->count()) {
            print_json(hmap::to_json(hmap::affine_transform(f, hmap::parse_complex(tr_affine))));
        } else if (opt_auto->count()) {
            const auto comma = tr_auto.rfind(',');
            if (comma == std::string::npos) {
                throw std::runtime_error("--auto expects 'a,theta'");
            }
            hmap::DiskAutomorphism phi{hmap::parse_complex(tr_auto.substr(0, comma)),
                                       std::stod(tr_auto.substr(comma + 1))};
            print_json(hmap::to_json(hmap::koebe_transform(f, phi)));
        } else {
            throw std::runtime_error("transform needs --affine or --auto");
        }
        return 0;
    }
    if (bcheck->parsed()) {
        print_json(hmap::to_json(hmap::check_coeff_bounds(
            load_map(bc_path), hmap::profile_by_name(bc_profile), bc_upto)));
        return 0;
    }
    if (gtable->parsed()) {
        std::cout << "r,lower,upper\n";
        for (double r : parse_radii(gt_radii)) {
            const auto iv = hmap::growth_interval(gt_alpha, r);
            std::cout << hmap::format_double(r) << "," << hmap::format_double(iv.lower) << ","
                      << hmap::format_double(iv.upper) << "\n";
        }
        return 0;
    }
    if (dtable->parsed()) {
        const auto variant = dt_variant == "stable_min" ? hmap::DistortionVariant::StableMin
                                                        : hmap::DistortionVariant::OrderEnvelope;
        std::cout << "r,jac_lower,jac_upper,h_bound,g_bound\n";
        for (double r : parse_radii(dt_radii)) {
            const auto jac = hmap::jacobian_interval(dt_alpha, dt_b1, r);
            const auto der = hmap::derivative_bounds(dt_alpha, dt_b1, r, variant);
            std::cout << hmap::format_double(r) << "," << hmap::format_double(jac.lower) << ","
                      << hmap::format_double(jac.upper) << "," << hmap::format_double(der.h_bound)
                      << "," << hmap::format_double(der.g_bound) << "\n";
        }
        return 0;
    }
    if (bradius->parsed()) {
        print_json(hmap::to_json(hmap::bohr_radius(hmap::profile_by_name(br_profile))));
        return 0;
    }
    if (bohrq->parsed()) {
        print_json(hmap::to_json(
            hmap::bohr_check(load_map(bq_path), hmap::profile_by_name(bq_profile), bq_r)));
        return 0;
    }
    if (stab->parsed()) {
        if (st_circle <= 0 && st_disk <= 0) {
            throw std::runtime_error("stability-table needs --eps-circle and/or --eps-disk");
        }
        const hmap::HarmonicMap f = load_map(st_path);
        std::vector<hmap::Complex> samples;
        for (int j = 0; j < st_circle; ++j) {
            samples.push_back(std::polar(1.0, 2.0 * M_PI * j / st_circle));
        }
        const double golden = M_PI * (3.0 - std::sqrt(5.0));
        for (int j = 0; j < st_disk; ++j) {
            samples.push_back(std::polar(std::sqrt((j + 0.5) / st_disk) * 0.97, golden * j));
        }
        const auto table = hmap::stability_scan(f, samples, hmap::scan_univalence_grid());
        std::cout << "eps_re,eps_im,univalent,convex,witness\n";
        for (const auto& row : table.rows) {
            std::cout << hmap::format_double(row.eps.real()) << ","
                      << hmap::format_double(row.eps.imag()) << ","
                      << hmap::to_string(row.univalent) << "," << hmap::to_string(row.convex)
                      << ",";
            if (row.witness) {
                std::cout << hmap::format_complex(row.witness->z1) << ";"
                          << hmap::format_complex(row.witness->z2);
            }
            std::cout << "\n";
        }
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
