#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mfcat/io.hpp"

namespace mfcat::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::optional<int> max_degree;
  bool graded = false;
  bool bounded = false;
  std::uint64_t seed = 0;
  std::string format = "text";

  SolveOptions solve() const {
    SolveOptions o;
    if (graded && bounded) throw UsageError("--graded and --bounded are exclusive");
    if (graded) o.mode = Mode::graded;
    if (bounded) o.mode = Mode::bounded;
    o.max_degree = max_degree;
    return o;
  }
  bool machine() const { return format == "machine"; }
};

// Ordered key=value pairs: one line in text format, one pair per line in
// machine format.
class Report {
 public:
  Report& add(const std::string& key, const std::string& value) {
    items_.emplace_back(key, value);
    return *this;
  }
  Report& add(const std::string& key, bool value) { return add(key, std::string(value ? "true" : "false")); }
  Report& add(const std::string& key, std::size_t value) { return add(key, std::to_string(value)); }
  Report& add(const std::string& key, int value) { return add(key, std::to_string(value)); }
  Report& add(const std::string& key, Certainty c) { return add(key, std::string(to_string(c))); }

  void print(std::ostream& out, bool machine) const {
    for (std::size_t i = 0; i < items_.size(); ++i) {
      out << items_[i].first << '=' << items_[i].second;
      out << (machine || i + 1 == items_.size() ? '\n' : ' ');
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

void print_object(std::ostream& out, const Common& c, const Object& x, Report extra = {}) {
  if (!c.machine()) {
    out << serialize(x);
    return;
  }
  extra.add("kind", kind_name(x));
  extra.add("document", nlohmann::json::parse(serialize(x)).dump());
  extra.print(out, true);
}

template <class T>
T as(const Object& x, const char* expected) {
  if (!std::holds_alternative<T>(x))
    throw UsageError(std::string("expected ") + expected + ", got a " + kind_name(x) + " document");
  return std::get<T>(x);
}

MFObject as_mf(const Object& x) {
  if (auto m = std::get_if<MonObject>(&x)) return functor_F(*m);
  return as<MFObject>(x, "an mf or mon object");
}

MFMorphism as_mf_morphism(const Object& x) {
  if (auto m = std::get_if<MonMorphism>(&x)) return functor_F(*m);
  return as<MFMorphism>(x, "a morphism");
}

Conflation as_conflation(const Object& x, const SolveOptions& opts) {
  auto c = as<ConflationData>(x, "a conflation");
  return conflation_validate(c.inflation, c.deflation, opts);
}

ConflationData data_of(const Conflation& c) { return {c.inflation, c.deflation}; }

int verdict_exit(const Verdict& v) {
  return !v.value && v.certainty == Certainty::bounded ? inconclusive : ok;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

void report_error(std::ostream& out, const Common& c, const Error& e) {
  Report r;
  r.add("error", std::string(to_string(e.kind())));
  if (auto v = dynamic_cast<const ValidationError*>(&e)) r.add("cause", std::string(to_string(v->cause())));
  if (auto s = dynamic_cast<const SyntaxError*>(&e)) {
    r.add("line", s->line());
    r.add("column", s->column());
  }
  r.add("certainty", e.certainty());
  r.add("detail", e.detail());
  r.print(out, c.machine());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix factorizations and monomorphism categories over polynomial rings", "mfcat"};
  app.require_subcommand(1);
  Common common;
  std::function<int()> action;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-degree", common.max_degree, "Degree bound for morphisms or bounded searches");
    sub->add_flag("--graded", common.graded, "Require graded (exact) solves");
    sub->add_flag("--bounded", common.bounded, "Force bounded-degree solves");
    sub->add_option("--seed", common.seed, "Random seed");
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  };
  auto command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    return sub;
  };

  std::string file_a, file_b, to, side = "projective", kind = "mf", field = "Q", vars = "x", omega_text = "x",
                                   modulus, blocks = "random";
  std::size_t pad = 0, size = 2, ops = 0;
  auto load = [&](const std::string& f) {
    if (!std::filesystem::is_regular_file(f)) throw UsageError("cannot read " + f);
    return read_object(f, common.solve());
  };

  CLI::App* sub = command("validate", "Parse and validate a document");
  sub->add_option("file", file_a)->required();
  sub->callback([&] {
    action = [&] {
      Object x = load(file_a);
      if (std::holds_alternative<ConflationData>(x)) as_conflation(x, common.solve());
      if (common.machine())
        Report().add("status", std::string("ok")).add("kind", kind_name(x)).print(out, true);
      else
        out << "ok\n";
      return ok;
    };
  });

  sub = command("convert", "Rewrite a document canonically, optionally through F or U");
  sub->add_option("file", file_a)->required();
  sub->add_option("--to", to, "Target kind")->check(CLI::IsMember({"mf", "mon", "mfg", "mong"}));
  sub->callback([&] {
    action = [&] {
      Object x = load(file_a);
      if (to.empty() || to == kind_name(x)) {
        print_object(out, common, x);
      } else if (to == "mf" && std::holds_alternative<MonObject>(x)) {
        print_object(out, common, functor_F(std::get<MonObject>(x)));
      } else if (to == "mon" && std::holds_alternative<MFObject>(x)) {
        print_object(out, common, functor_U(std::get<MFObject>(x)));
      } else if (to == "mfg" && std::holds_alternative<MonGObject>(x)) {
        print_object(out, common, functor_F_g(std::get<MonGObject>(x)));
      } else if (to == "mong" && std::holds_alternative<MFGObject>(x)) {
        print_object(out, common, functor_U_g(std::get<MFGObject>(x)));
      } else {
        throw UsageError("cannot convert a " + kind_name(x) + " document to " + to);
      }
      return ok;
    };
  });

  sub = command("shift", "Shift of an mf object or morphism");
  sub->add_option("file", file_a)->required();
  sub->callback([&] {
    action = [&] {
      Object x = load(file_a);
      if (auto f = std::get_if<MFMorphism>(&x))
        print_object(out, common, mf_shift(*f));
      else
        print_object(out, common, mf_shift(as<MFObject>(x, "an mf object or morphism")));
      return ok;
    };
  });

  sub = command("cone", "Mapping cone of an mf morphism");
  sub->add_option("file", file_a)->required();
  sub->callback([&] {
    action = [&] {
      print_object(out, common, mf_cone(as_mf_morphism(load(file_a))));
      return ok;
    };
  });

  sub = command("dsum", "Direct sum of two objects");
  sub->add_option("first", file_a)->required();
  sub->add_option("second", file_b)->required();
  sub->callback([&] {
    action = [&] {
      Object x = load(file_a), y = load(file_b);
      if (auto m = std::get_if<MonObject>(&x))
        print_object(out, common, mon_dsum(*m, as<MonObject>(y, "a mon object")));
      else
        print_object(out, common, mf_dsum(as<MFObject>(x, "an mf or mon object"), as<MFObject>(y, "an mf object")));
      return ok;
    };
  });

  sub = command("homotopic", "Decide whether a morphism is null-homotopic");
  sub->add_option("file", file_a)->required();
  sub->callback([&] {
    action = [&] {
      Verdict v = mf_null_homotopic(as_mf_morphism(load(file_a)), common.solve());
      Report().add("null_homotopic", v.value).add("certainty", v.certainty).print(out, common.machine());
      return verdict_exit(v);
    };
  });

  sub = command("reduce", "Split off trivial blocks");
  sub->add_option("file", file_a)->required();
  sub->callback([&] {
    action = [&] {
      Reduction r = mf_reduce(as_mf(load(file_a)));
      print_object(out, common, r.reduced,
                   Report().add("unit_blocks", r.unit_blocks).add("omega_blocks", r.omega_blocks));
      return ok;
    };
  });

  sub = command("contractible", "Decide whether an object is contractible");
  sub->add_option("file", file_a)->required();
  sub->callback([&] {
    action = [&] {
      Verdict v = mf_is_contractible(as_mf(load(file_a)), common.solve());
      Report().add("contractible", v.value).add("certainty", v.certainty).print(out, common.machine());
      return verdict_exit(v);
    };
  });

  sub = command("stabhom", "Dimension of stable morphisms in degrees <= --max-degree");
  sub->add_option("first", file_a)->required();
  sub->add_option("second", file_b)->required();
  sub->callback([&] {
    action = [&] {
      Object x = load(file_a), y = load(file_b);
      SolveOptions o = common.solve();
      StableHomDim d;
      if (auto a = std::get_if<RModulePresentation>(&x))
        d = r_stable_hom_dim(*a, as<RModulePresentation>(y, "an rmod document"), o);
      else if (auto a = std::get_if<MFGObject>(&x))
        d = mfg_stable_hom_dim(*a, as<MFGObject>(y, "an mfg object"), o);
      else if (auto a = std::get_if<MonGObject>(&x))
        d = mfg_stable_hom_dim(functor_F_g(*a), functor_F_g(as<MonGObject>(y, "a mong object")), o);
      else
        d = mf_stable_hom_dim(as_mf(x), as_mf(y), o);
      Report().add("dim", d.dim).add("certainty", d.certainty).add("max_degree", d.degree_bound).print(out, common.machine());
      return ok;
    };
  });

  sub = command("envelope", "Projective or injective envelope conflation of a mon object");
  sub->add_option("file", file_a)->required();
  sub->add_option("--side", side, "Envelope side")->check(CLI::IsMember({"projective", "injective"}));
  sub->add_option("--pad", pad, "Extra free summands for the injective envelope");
  sub->callback([&] {
    action = [&] {
      MonObject m = as<MonObject>(load(file_a), "a mon object");
      Conflation c = side == "projective" ? projective_envelope(m) : injective_envelope(m, pad, common.solve());
      print_object(out, common, data_of(c));
      return ok;
    };
  });

  sub = command("pushout", "Pushout of a conflation's inflation along a mon morphism");
  sub->add_option("conflation", file_a)->required();
  sub->add_option("morphism", file_b)->required();
  sub->callback([&] {
    action = [&] {
      Conflation c = as_conflation(load(file_a), common.solve());
      Pushout p = pushout_inflation(c, as<MonMorphism>(load(file_b), "a mon morphism"));
      print_object(out, common, data_of(p.inflation));
      return ok;
    };
  });

  sub = command("eisenbud", "Matrix factorization of an MCM presentation");
  sub->add_option("file", file_a)->required();
  sub->callback([&] {
    action = [&] {
      print_object(out, common, eisenbud_mf(as<RModulePresentation>(load(file_a), "an rmod document"), common.solve()));
      return ok;
    };
  });

  sub = command("tfunctor", "Image of an MCM module in the monomorphism category");
  sub->add_option("file", file_a)->required();
  sub->callback([&] {
    action = [&] {
      print_object(out, common, functor_T(as<RModulePresentation>(load(file_a), "an rmod document"), common.solve()));
      return ok;
    };
  });

  sub = command("tcompare", "Compare stable hom dimensions over R and in Mon");
  sub->add_option("first", file_a)->required();
  sub->add_option("second", file_b)->required();
  sub->callback([&] {
    action = [&] {
      auto a = as<RModulePresentation>(load(file_a), "an rmod document");
      auto b = as<RModulePresentation>(load(file_b), "an rmod document");
      TCompareReport t = t_compare(a, b, common.solve());
      Report r;
      r.add("dim_R", t.r.dim).add("dim_mon", t.mon.dim).add("equal", t.equal);
      if (common.machine()) r.add("certainty_R", t.r.certainty).add("certainty_mon", t.mon.certainty);
      r.print(out, common.machine());
      return ok;
    };
  });

  sub = command("generate", "Seeded random object");
  sub->add_option("--kind", kind, "Object kind")->check(CLI::IsMember({"mf", "mon", "rmod"}));
  sub->add_option("--field", field, "Coefficient field (Q or Fp)");
  sub->add_option("--vars", vars, "Comma-separated variables");
  sub->add_option("--omega", omega_text, "Polynomial omega");
  sub->add_option("--grading", modulus, "Comma-separated variable weights");
  sub->add_option("--size", size, "Number of seed blocks");
  sub->add_option("--ops", ops, "Number of scrambling operations");
  sub->add_option("--blocks", blocks, "Seed block choice")->check(CLI::IsMember({"random", "trivial", "family"}));
  sub->callback([&] {
    action = [&] {
      std::optional<std::vector<int>> grading;
      if (!modulus.empty()) {
        grading.emplace();
        for (const auto& w : split(modulus, ',')) grading->push_back(std::stoi(w));
      }
      RingPtr ring;
      Poly omega;
      try {
        ring = RingSpec::make(FieldSpec::parse(field), split(vars, ','), grading);
        omega = parse_poly(omega_text, ring);
      } catch (const Error& e) {
        throw UsageError(e.detail());
      }
      GenerateOptions g;
      g.size = size;
      g.ops = ops;
      g.blocks = blocks == "trivial" ? BlockChoice::trivial
                 : blocks == "family" ? BlockChoice::family
                                      : BlockChoice::random;
      if (kind == "mon") {
        print_object(out, common, mon_generate(common.seed, ring, omega, g));
      } else {
        MFObject x = mf_generate(common.seed, ring, omega, g);
        if (kind == "mf")
          print_object(out, common, x);
        else
          print_object(out, common, rmod_make(omega, x.rho1));
      }
      return ok;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "run with --help for usage\n";
    return usage_error;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return usage_error;
  } catch (const Error& e) {
    report_error(out, common, e);
    return e.certainty() == Certainty::bounded ? inconclusive : validation_failure;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return usage_error;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace mfcat::cli
