// Generated by tests/oracles/generate_values.py; do not edit by hand.
#pragma once

namespace oracle {

inline const char* const kPi = "3.14159265358979323846264338327950288419716939937510582097494";
inline const char* const kPiSquaredOver4 = "2.46740110027233965470862274996903778382842485181019765660334";
inline const char* const kFourOverPi = "1.27323954473516268615107010698011489627567716592365158998134";
inline const char* const kPiOver2 = "1.57079632679489661923132169163975144209858469968755291048747";
inline const char* const kTrigammaHalf = "4.93480220054467930941724549993807556765684970362039531320667";
inline const char* const kTrigammaOne = "1.64493406684822643647241516664602518921894990120679843773556";
inline const char* const kTrigamma03 = "1.22453645461077304654736035330887364357177827663415325477426e+1";
inline const char* const kTrigamma37 = "3.10037857670038319103859298119997078384087797743453425589588e-1";
inline const char* const kZeta3 = "1.20205690315959428539973816151144999076498629234049888179227";
inline const char* const kSevenZeta3Over2 = "4.20719916105857999889908356529007496767745202319174608627295";
inline const char* const kTrigammaClosed01 = "1.86011741187264006153028133148090117720387801115938369118785e-2";
inline const char* const kTrigammaClosed03 = "1.8794160121543280922144602917673729571543247640180124099826e-1";
inline const char* const kTrigammaClosed05 = "5.0e-1";
inline const char* const kTrigammaClosed07 = "8.1205839878456719077855397082326270428456752359819875900174e-1";
inline const char* const kTrigammaClosed09 = "9.81398825881273599384697186685190988227961219888406163088121e-1";
inline const char* const kEulerProductTenth = "8.90010099998999000000100009999999989999900000000001000001e-1";
inline const char* const kEulerProductHalf = "2.88788095086602421278899721929230780088911904840685784114741e-1";
inline const char* const kMainLhsHalfQuarter = "1.37618643741197201275651356723794519188374676096329342857556e-1";
inline const char* const kMainRhsHalfQuarter = "1.37618643741197201275651356723794519188374676096329342857556e-1";
inline const char* const kMainLhsFifthThreeQuarters = "3.74724032121746408181095585365761721656268803939743425967616e-1";
inline const char* const kMainLhsHalfTwo = "1.33635714740192736163300834212307659733264285477942647655777e-1";
inline const char* const kHks1LhsHalf = "2.20711229668954634951540724526027022591127850321576089109944";
inline const char* const kHks2RhsHalf = "1.81569893346613204993022613362087338507091729888424042734072";
inline const char* const kHClosed03Half = "-6.39331775967283513112148403159728201588790869525351319241119e-2";
inline const char* const kHClosed1Half = "1.44394047543301210639449860964615390044455952420342892057371e-1";
inline const char* const kQgammaScaled09 = "1.53066926600591698896738778581341338986168839143543115135764";
inline const char* const kQgammaScaled0999 = "1.57040354586405291306066531430459865508096393867143993134509";
inline const char* const kHks1Scaled09 = "2.41695545462985296424481405615040617228374333175041756610315";
inline const char* const kQpochFiniteThird = "5.297359375e-1";
inline constexpr long kF21HalfNum = 18;
inline constexpr long kF21HalfDen = 35;
inline constexpr long kGauss42HalfNum = 35;
inline constexpr long kGauss42HalfDen = 16;

}  // namespace oracle
