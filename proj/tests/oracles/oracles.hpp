#pragma once

// Reference values from mpmath at 50 digits (gen_oracles.py).

namespace oracle {

struct JRow { int n; double x; double re; double im; };
inline constexpr JRow kBesselJ[] = {
    {0, 0.1, 0.99750156206604003228, 0.0},
    {0, 1, 0.76519768655796655145, 0.0},
    {0, 5, -0.17759677131433830435, 0.0},
    {0, 20, 0.16702466434058315473, 0.0},
    {0, 29.5, -0.133147858298398214, 0.0},
    {0, 30.5, -0.019389754517762152066, 0.0},
    {0, 45, 0.11581867067325632359, 0.0},
    {0, 80, -0.06974216551221002284, 0.0},
    {1, 0.1, -0.68760307795674029849, -0.36099984330668406062},
    {1, 1, 0.65400855038925911718, -0.18992535466621448754},
    {1, 5, -0.20497019234408305368, -0.28702719807281961016},
    {1, 20, 0.16843134442697774617, 0.058416038383760262953},
    {1, 29.5, -0.13414103249588743101, -0.059758339357567589995},
    {1, 30.5, -0.021726493538603236725, -0.14278218297307742441},
    {1, 45, 0.11609778087753386467, 0.025769171065766428926},
    {1, 80, -0.070085657748744468881, -0.055181255009930868719},
    {2, 0.1, 0.5553880801058195171, 0.091723036985534599652},
    {2, 1, 0.082918960946980093845, -0.53238634397679039434},
    {2, 5, -0.27141541900549071094, -0.21070809313710095214},
    {2, 20, 0.17200741234556060681, 0.045577158382818287005},
    {2, 29.5, -0.13688452233866884451, -0.052825604305559535672},
    {2, 30.5, -0.028689309313729862594, -0.14142934871581838638},
    {2, 45, 0.1168485623772575261, 0.021879397056845114123},
    {2, 80, -0.071099448279926384303, -0.053851418930173844596},
    {3, 0.1, -0.37612433055731586867, 0.26574348302748917763},
    {3, 1, -0.44804276528728157669, -0.037503699577051655108},
    {3, 5, -0.32488817637668183375, -0.060887140506730420778},
    {3, 20, 0.17579660995743303273, 0.023791223720169757187},
    {3, 29.5, -0.14065793901118145979, -0.041013186492854711519},
    {3, 30.5, -0.040099473418692593293, -0.13842675100409272582},
    {3, 45, 0.11781005178403287426, 0.015353183799874000414},
    {3, 80, -0.072732719925297892303, -0.051594141698887292893},
    {5, 0.1, 0.35624156613136853989, 0.019783423774253291831},
    {5, 1, 0.20545151013718160471, -0.28762286209662087248},
    {5, 5, -0.090173159420489019238, 0.28647954419881781566},
    {5, 20, 0.16970500139653354354, -0.045549680301014144497},
    {5, 29.5, -0.14584404413085069908, -0.0019782390265637033289},
    {5, 30.5, -0.07419273883074031078, -0.12284540971676106362},
    {5, 45, 0.11843799975357316608, -0.0056766261353516342811},
    {5, 80, -0.077469567416035998777, -0.044051847922627658929},
};

struct KRow { int n; double x; double value; };
inline constexpr KRow kBesselK[] = {
    {0, 0.01, 4.7212447301610949651},
    {0, 0.1, 2.4270690247020166125},
    {0, 1, 0.42102443824070833334},
    {0, 5, 0.0036910983340425942747},
    {0, 20, 5.7412378153365242927e-10},
    {1, 0.01, -0.50063371682748454821},
    {1, 0.1, 0.22538188530156776969},
    {1, 1, 0.28942803702599212763},
    {1, 5, 0.0033670999885610447448},
    {1, 20, 5.6027857553464753084e-10},
    {2, 0.01, -0.073834841938384282526},
    {2, 0.1, -0.012290334958861461438},
    {2, 1, 0.08061699762236597857},
    {2, 5, 0.0025494652779584352942},
    {2, 20, 5.2068587804595920715e-10},
    {3, 0.01, -0.012297294234570473341},
    {3, 0.1, -0.0075188388700269049911},
    {3, 1, -0.00088614792322813929029},
    {3, 5, 0.0015891029050314698599},
    {3, 20, 4.6073315805456139052e-10},
    {5, 0.01, -0.00038948309112824172439},
    {5, 0.1, -0.000023714186988122360827},
    {5, 1, 0.00038046182799756372805},
    {5, 5, 0.00031859102518674590251},
    {5, 20, 3.1100590842180056295e-10},
};

struct LogGammaRow { double re; double im; double lg_re; double lg_im; };
inline constexpr LogGammaRow kLogGamma[] = {
    {0.5, 0, 0.57236494292470008707, 0.0},
    {1, 0, 0.0, 0.0},
    {0.25, 2.5, -3.2358405107546571083, -0.59779566073996209783},
    {0.75, -0.5, -0.074102531408119960896, 0.45297189501492411775},
    {3, 7, -5.1625232203418129939, 10.116252238416788574},
    {0.5, 10, -14.789024734744293451, 13.030020034911089851},
    {12, -3, 17.115555451568359139, -7.3612785027574099492},
    {0.01, 0.5, 0.49876617346312733711, -1.7877713903346783898},
};

struct GammaProductRow { double mu; int n; double value; };
inline constexpr GammaProductRow kGammaProduct[] = {
    {-0.5, 1, 0.86225428052050440472},
    {-0.5, 2, 0.26641446216607421834},
    {-0.5, 5, 0.0038467443429959317409},
    {-1, 1, 0.68256945033085777154},
    {-1, 2, 0.27202905498213316295},
    {-1, 5, 0.0060978825867431862381},
    {0, 1, 1.2520403312521476231},
    {0, 2, 0.27101495139941834789},
    {0, 5, 0.0024391522995282331647},
    {0.25, 1, 1.5702500705324463489},
    {0.25, 2, 0.27445412697020750535},
    {0.25, 5, 0.0019429112560766764353},
};

struct LommelRow { double mu; int n; double x; double value; };
inline constexpr LommelRow kLommel[] = {
    {-0.5, 1, 0.05, 0.44479673006728518762},
    {-0.5, 1, 0.5, 0.71188140919795955751},
    {-0.5, 1, 2, 0.24649156965048736785},
    {-0.5, 1, 10, 0.030702487367552395601},
    {-0.5, 1, 50, 0.0028247694191335381186},
    {-0.5, 2, 0.05, 0.076130852612694340636},
    {-0.5, 2, 0.5, 0.20959714353734900977},
    {-0.5, 2, 2, 0.18192675345297871557},
    {-0.5, 2, 10, 0.029894579991163998465},
    {-0.5, 2, 50, 0.0028214014038287193981},
    {-0.5, 3, 0.05, 0.017037220653473114472},
    {-0.5, 3, 0.5, 0.06803012662589139316},
    {-0.5, 3, 2, 0.11767869650918160771},
    {-0.5, 3, 10, 0.02863007960655580571},
    {-0.5, 3, 50, 0.0028158057341456095929},
    {-1, 1, 0.05, 1.5052884744238138753},
    {-1, 1, 0.5, 0.70047127147591483622},
    {-1, 1, 2, 0.15196330714008053336},
    {-1, 1, 10, 0.0095646466037490954427},
    {-1, 1, 50, 0.00039920536150129599184},
    {-1, 2, 0.05, 0.23690565310924652802},
    {-1, 2, 0.5, 0.27879712383178078158},
    {-1, 2, 2, 0.11637476690690062568},
    {-1, 2, 10, 0.0093192830059997850442},
    {-1, 2, 50, 0.00039873008044123770736},
    {-1, 3, 0.05, 0.10718141574058008084},
    {-1, 3, 0.5, 0.10700258237895449397},
    {-1, 3, 2, 0.079052635632580366999},
    {-1, 3, 10, 0.0089345224830315005315},
    {-1, 3, 50, 0.00039794043608282759679},
    {0.25, 1, 0.05, -0.27669363940043923484},
    {0.25, 1, 0.5, 0.63987730108409260314},
    {0.25, 1, 2, 0.4830479292966298948},
    {0.25, 1, 10, 0.17524706820905869271},
    {0.25, 1, 50, 0.053149832411270084923},
    {0.25, 2, 0.05, 0.094143987463731786949},
    {0.25, 2, 0.5, 0.063039827288733994605},
    {0.25, 2, 2, 0.33325811735091346756},
    {0.25, 2, 10, 0.17047718561999983548},
    {0.25, 2, 50, 0.053086344288854432957},
    {0.25, 3, 0.05, 0.0013203873327195026658},
    {0.25, 3, 0.5, 0.028436881752829837322},
    {0.25, 3, 2, 0.19809918312978306837},
    {0.25, 3, 10, 0.16303260870759261812},
    {0.25, 3, 50, 0.052980865185459736416},
};

struct KernelRow { char kind; int n; double mu; double x; double value; };
inline constexpr KernelRow kKernels[] = {
    {'r', 0, 0, 0.5, -0.012121060180240013356},
    {'r', 0, 0, 2, -0.023524396896909132784},
    {'r', 0, 0, 7, -0.014995456943503192979},
    {'r', 1, 0, 0.5, 2.9568683031552913609},
    {'r', 1, 0, 2, -0.1640147333775654762},
    {'r', 1, 0, 7, 0.24222292435038932482},
    {'r', 3, 0, 0.5, 3.979733424368601538},
    {'r', 3, 0, 2, 0.44495477928424680226},
    {'r', 3, 0, 7, 0.27427542892868728534},
    {'i', 0, 0, 0.5, -1.8951734276735745452},
    {'i', 0, 0, 2, -0.91934394548319072569},
    {'i', 0, 0, 7, -0.16702563963992999408},
    {'i', 1, 0, 0.5, 2.526125887904469108},
    {'i', 1, 0, 2, -0.021000773197157364453},
    {'i', 1, 0, 7, -0.0042436655981158932336},
    {'i', 3, 0, 0.5, -2.5183415712020381664},
    {'i', 3, 0, 2, 1.1576991428399281266},
    {'i', 3, 0, 7, 0.14709794769830344419},
    {'l', 1, -0.5, 0.5, 0.7019175435669182002},
    {'l', 1, -0.5, 2, -0.39359990766327357044},
    {'l', 1, -0.5, 7, -0.039958474033731160322},
    {'l', 2, -0.5, 0.5, 3.09163927436821336},
    {'l', 2, -0.5, 2, -0.69304812723027130583},
    {'l', 2, -0.5, 7, -0.053015811150718144576},
    {'l', 3, -0.5, 0.5, -4.1195372727629663022},
    {'l', 3, -0.5, 2, 0.035193237158929600599},
    {'l', 3, -0.5, 7, -0.015055885192846385594},
};

}  // namespace oracle
