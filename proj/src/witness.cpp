#include "eulerfan/witness.hpp"

#include <stdexcept>
#include <string>

namespace eulerfan {

namespace {

Rational R(const char* s) { return Rational::from_string(s); }

FanConfiguration<Rational> make_witness() {
  FanConfiguration<Rational> w;

  w.datum.rho_minus = R("2708112612978501/281474976710656");
  w.datum.rho_plus = w.datum.rho_minus;
  w.datum.v_minus = {R("-4098844157247653/70368744177664"),
                     R("-996118042660627/70368744177664")};
  w.datum.v_plus = {R("3603433899522037/562949953421312"), w.datum.v_minus.v2};

  w.speeds = {
      R("-6486283176597739958874052307549/196306040423407104692364247040"),
      R("-1153852086001065889673487658885/60824224363690518566334889984"),
      R("-4856156003780791/562949953421312"),
      R("7162856387903725/562949953421312"),
  };

  WaveState<Rational> s1, s2, s3;
  s1.rho = R("6811063536043807/562949953421312");
  s1.alpha = R("-8177336068870495/140737488355328");
  s1.beta = R("-2536561643647751/140737488355328");
  s1.gamma = R("841617150350781/549755813888");
  s1.delta = R("28872176135415855785280523654056524019908546591/"
               "27627619078169805047324756605549438692229120");
  s1.C = R("510415269881361/137438953472");

  s2.rho = R("2057060350258899/562949953421312");
  s2.alpha = R("-4833381446756075/562949953421312");
  s2.beta = R("-1114286601116939/70368744177664");
  s2.gamma = R("-2850833975067331/17592186044416");
  s2.delta = R("-867454945412067709200232997995952542374584537720982074207241594308599438377/"
               "32748846874784971211058574285222379723549486466626634273206947431338475520");
  s2.C = R("1515879700153707/2199023255552");

  s3.rho = R("3062207031116133/281474976710656");
  s3.alpha = R("3121572020159473/562949953421312");
  s3.beta = R("-6219197795695073/562949953421312");
  s3.gamma = R("-8954832877447991/140737488355328");
  s3.delta = R("-2871256077954219/35184372088832");
  s3.C = R("1855257252703141/8796093022208");

  w.states = {s1, s2, s3};

  w.thermo.eps_minus = R("-5041529442624971/2199023255552");
  w.thermo.eps_plus = w.thermo.eps_minus;
  w.thermo.eps = {
      R("-5015532875605977/2199023255552"),
      R("-5073206593829053/2199023255552"),
      R("-2515400677054201/1099511627776"),
  };
  w.thermo.deps_minus = R("1676289422169645/562949953421312");
  w.thermo.deps_plus = w.thermo.deps_minus;
  w.thermo.deps = {
      R("60006068216738166351756926651195471316209797920723479281182349/"
        "9106752347169134708406278810788569756749285046122185710632960"),
      R("1831278218949756891087541424381121781924211556364089293813566516592411003/"
        "1359848686641341079894728790850171965963388817622134940140753492461486080"),
      R("5400383921383283/1125899906842624"),
  };

  w.validate();
  return w;
}

}  // namespace

const FanConfiguration<Rational>& builtin_witness() {
  static const FanConfiguration<Rational> w = make_witness();
  return w;
}

RiemannDatum<Rational> witness_datum() { return builtin_witness().datum; }

FanConfiguration<double> witness_config_double() {
  return config_from_rational<double>(builtin_witness());
}

const FanConfiguration<Rational>& builtin_config(std::string_view name) {
  if (name == kWitnessName) return builtin_witness();
  throw std::invalid_argument("unknown builtin configuration: '" + std::string(name) + "'");
}

}  // namespace eulerfan
