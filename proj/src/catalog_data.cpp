// Source statements of the inequality catalogue, one row per line:
//   id | context | statement | condition
// Statements use sigma1 = sigma - zeta*pt*sol, sigma32 = sigma - 3.2*zeta*pt*sol and
// tau = zeta*pt*sol - sigma; these are expanded when the catalogue is built.
// Edge labels: y1..y3 run from the origin to the corners, y4 is opposite y1,
// y5 opposite y2, y6 opposite y3.

namespace starbound {

extern const char* const kCatalogSource;

const char* const kCatalogSource = R"CAT(
# quad clusters, dih is any one of the four dihedral angles
4.1.1  | quad | sigma < -5.7906 + 4.56766*dih | none
4.1.2  | quad | sigma < -2.0749 + 1.5094*dih | none
4.1.3  | quad | sigma < -0.8341 + 0.5301*dih | none
4.1.4  | quad | sigma < -0.6284 + 0.3878*dih | none
4.1.5  | quad | sigma < 0.4124 - 0.1897*dih | none
4.1.6  | quad | sigma < 1.5707 - 0.5905*dih | none
4.1.7  | quad | sigma < 0.41717 - 0.3*sol | none
4.1.8  | quad | sigma1 < -5.81446 + 4.49461*dih | none
4.1.9  | quad | sigma1 < -2.955 + 2.1406*dih | none
4.1.10 | quad | sigma1 < -0.6438 + 0.316*dih | none
4.1.11 | quad | sigma1 < -0.1317 | none
4.1.12 | quad | sigma1 < 0.3825 - 0.2365*dih | none
4.1.13 | quad | sigma1 < 1.071 - 0.4747*dih | none
4.1.14 | quad | sigma32 < -5.77942 + 4.25863*dih | none
4.1.15 | quad | sigma32 < -4.893 + 3.5294*dih | none
4.1.16 | quad | sigma32 < -0.4126 | none
4.1.17 | quad | sigma32 < 0.33 - 0.316*dih | none
4.1.18 | quad | sigma < -0.419351*sol - 5.350181 + 4.611391*dih | none
4.1.19 | quad | sigma < -0.419351*sol - 1.66174 + 1.582508*dih | none
4.1.20 | quad | sigma < -0.419351*sol + 0.0895 + 0.342747*dih | none
4.1.21 | quad | sigma < -0.419351*sol + 3.36909 - 0.974137*dih | none

# quad clusters, dih1 and dih2 adjacent
4.2.1 | quad | sigma < -9.494 + 3.0508*(dih1 + dih2) | none
4.2.2 | quad | sigma < -1.0472 + 0.27605*(dih1 + dih2) | none
4.2.3 | quad | sigma < 3.5926 - 0.844*(dih1 + dih2) | none

4.3.1 | quad | 1.153 < dih | none
4.3.2 | quad | dih < 3.247 | none

G1.1 | qrtet | sigma <= pt | none
G1.2 | qrtet | dih < 1.874445 | none
G1.3 | qrtet | dih > 0.8638 | none
G1.4 | qrtet | sigma < -0.37642101*sol + 0.287389 | none
G1.5 | qrtet | sigma < 0.446634*sol - 0.190249 | none
G1.6 | qrtet | sigma < -0.419351*sol + 0.2856354 + 0.001 | none
G1.7 | quad  | sigma <= 0 | none

G2.1 | qrtet | sol > 0.551285 + 0.199235*(y4 + y5 + y6 - 6) - 0.377076*(y1 + y2 + y3 - 6) | none
G2.2 | qrtet | sol < 0.551286 + 0.320937*(y4 + y5 + y6 - 6) - 0.152679*(y1 + y2 + y3 - 6) | none
G2.3 | qrtet | dih > 1.23095 - 0.359894*(y2 + y3 + y5 + y6 - 8) + 0.003*(y1 - 2) + 0.685*(y4 - 2) | none
G2.4 | qrtet | dih < 1.23096 - 0.153598*(y2 + y3 + y5 + y6 - 8) + 0.498*(y1 - 2) + 0.76446*(y4 - 2) | none
G2.5 | qrtet | sigma < 0.0553737 - 0.10857*(y1 + y2 + y3 + y4 + y5 + y6 - 12) | none
G2.6 | qrtet | sigma + 0.419351*sol < 0.28665 - 0.2*(y1 + y2 + y3 - 6) | none
G2.7 | qrtet | sigma1 < 0.000001 - 0.129119*(y4 + y5 + y6 - 6) - 0.0845696*(y1 + y2 + y3 - 6) | none

G3.1  | qrtet | sigma < 0.37898*dih - 0.4111 | none
G3.2  | qrtet | sigma < -0.142*dih + 0.23021 | none
G3.3  | qrtet | sigma < -0.3302*dih + 0.5353 | none
G3.4  | qrtet | sigma1 < 0.3897*dih - 0.4666 | none
G3.5  | qrtet | sigma1 < 0.2993*dih - 0.3683 | none
G3.6  | qrtet | sigma1 <= 0 | none
G3.7  | qrtet | sigma1 < -0.1689*dih + 0.208 | none
G3.8  | qrtet | sigma1 < -0.2529*dih + 0.3442 | none
G3.9  | qrtet | sigma32 < 0.4233*dih - 0.5974 | none
G3.10 | qrtet | sigma32 < 0.1083*dih - 0.255 | none
G3.11 | qrtet | sigma32 < -0.0953*dih - 0.0045 | none
G3.12 | qrtet | sigma32 < -0.1966*dih + 0.1369 | none
G3.13 | qrtet | sigma < -0.419351*sol + 0.796456*dih - 0.5786316 | none
G3.14 | qrtet | sigma < -0.419351*sol + 0.0610397*dih + 0.211419 | none
G3.15 | qrtet | sigma < -0.419351*sol - 0.0162028*dih + 0.308526 | none
G3.16 | qrtet | sigma < -0.419351*sol - 0.0499559*dih + 0.35641 | none
G3.17 | qrtet | sigma < -0.419351*sol - 0.64713719*dih + 1.3225 | none

# vertex rows aggregate over the clusters at one vertex
G4.1 | vertex | sigma <= 0.33*pt | none
G4.2 | vertex | dih <= 2*pi | none
G4.3 | vertex | sigma < -0.419351*sol + 5*0.2856354 | none
G4.4 | flat   | -0.398*(y2 + y3 + y5 + y6) + 0.3257*y1 - dih1 < -4.14938 | y4 >= 2.51

G5.1  | qrtet | tau > 0.55*pt | y4 >= 2.1773
G5.2  | qrtet | tau > 2*0.55*pt | y4 >= 2.1773 & y5 >= 2.1773
G5.3  | qrtet | tau > -0.29349 + 0.2384*dih | y4 <= 2.1773
G5.4  | qrtet | tau > -0.26303 + 0.2384*dih | y4 <= 2.1773 & y6 <= 2.1773 & y5 >= 2.1773
G5.5  | qrtet | tau > -0.5565 + 0.2384*(dih1 + dih2) | y6 >= 2.1773 & y4 <= 2.1773 & y5 <= 2.1773
G5.6  | qrtet | tau > -2*0.29349 + 0.2384*(dih1 + dih2) | y4 <= 2.1773 & y5 <= 2.1773 & y6 <= 2.1773
G5.7  | qrtet | tau > -3*0.29349 + 0.2384*(dih1 + dih2 + dih3) | y4 <= 2.1773 & y5 <= 2.1773 & y6 <= 2.1773
G5.8  | qrtet | sigma < (1 - 0.48)*pt | y4 >= 2.177303
G5.9  | qrtet | sigma < (1 - 2*0.48)*pt | y4 >= 2.177303 & y5 >= 2.177303
G5.10 | qrtet | sigma < 0.31023815 - 0.207045*dih | y4 <= 2.177303
G5.11 | qrtet | sigma < 0.28365 - 0.207045*dih | y4 <= 2.177303 & y6 <= 2.177303 & y5 >= 2.177303
G5.12 | qrtet | sigma < 0.53852 - 0.207045*(dih1 + dih2) | y6 >= 2.177303 & y4 <= 2.177303 & y5 <= 2.177303
G5.13 | qrtet | sigma < -pt + 2*0.31023815 - 0.207045*(dih1 + dih2) | y4 <= 2.177303 & y5 <= 2.177303 & y6 <= 2.177303
G5.14 | qrtet | sigma < -2*pt + 3*0.31023815 - 0.207045*(dih1 + dih2 + dih3) | y4 <= 2.177303 & y5 <= 2.177303 & y6 <= 2.177303

# flat quarters, y4 is the diagonal
A.2.1  | flat | -dih2 + 0.35*y2 - 0.15*y1 - 0.15*y3 + 0.7022*y5 - 0.17*y4 > -0.0123 | none
A.2.2  | flat | -dih3 + 0.35*y3 - 0.15*y1 - 0.15*y2 + 0.7022*y6 - 0.17*y4 > -0.0123 | none
A.2.3  | flat | dih2 - 0.13*y2 + 0.631*y1 + 0.31*y3 - 0.58*y5 + 0.413*y4 + 0.025*y6 > 2.63363 | none
A.2.4  | flat | dih3 - 0.13*y3 + 0.631*y1 + 0.31*y2 - 0.58*y6 + 0.413*y4 + 0.025*y5 > 2.63363 | none
A.2.5  | flat | -dih1 + 0.714*y1 - 0.221*y2 - 0.221*y3 + 0.92*y4 - 0.221*y5 - 0.221*y6 > 0.3482 | none
A.2.6  | flat | dih1 - 0.315*y1 + 0.3972*y2 + 0.3972*y3 - 0.715*y4 + 0.3972*y5 + 0.3972*y6 > 2.37095 | none
A.2.7  | flat | -sol - 0.187*y1 - 0.187*y2 - 0.187*y3 + 0.1185*y4 + 0.479*y5 + 0.479*y6 > 0.437235 | none
A.2.8  | flat | sol + 0.488*y1 + 0.488*y2 + 0.488*y3 - 0.334*y5 - 0.334*y6 > 2.244 | none
A.2.9  | flat | -sigma - 0.159*y1 - 0.081*y2 - 0.081*y3 - 0.133*y5 - 0.133*y6 > -1.17401 | none
A.2.10 | flat | sigma < -0.419351*sol + 0.1448 + 0.0436*(y5 + y6 - 4) + 0.079431*dih | none
A.2.11 | flat | sigma < 0.000001 - 0.197*(y4 + y5 + y6 - 2*sqrt2 - 4) | none

# upright quarters, y1 is the upright diagonal
A.3.1  | upright | dih1 - 0.636*y1 + 0.462*y2 + 0.462*y3 - 0.82*y4 + 0.462*y5 + 0.462*y6 > 1.82419 | none
A.3.2  | upright | -dih1 + 0.55*y1 - 0.214*y2 - 0.214*y3 + 1.24*y4 - 0.214*y5 - 0.214*y6 > 0.75281 | none
A.3.3  | upright | dih2 + 0.4*y1 - 0.15*y2 + 0.09*y3 + 0.631*y4 - 0.57*y5 + 0.23*y6 > 2.5481 | none
A.3.4  | upright | -dih2 - 0.454*y1 + 0.34*y2 + 0.154*y3 - 0.346*y4 + 0.805*y5 > -0.3429 | none
A.3.5  | upright | dih3 + 0.4*y1 - 0.15*y3 + 0.09*y2 + 0.631*y4 - 0.57*y6 + 0.23*y5 > 2.5481 | none
A.3.6  | upright | -dih3 - 0.454*y1 + 0.34*y3 + 0.154*y2 - 0.346*y4 + 0.805*y6 > -0.3429 | none
A.3.7  | upright | sol + 0.065*y2 + 0.065*y3 + 0.061*y4 - 0.115*y5 - 0.115*y6 > 0.2618 | none
A.3.8  | upright | -sol - 0.293*y1 - 0.03*y2 - 0.03*y3 + 0.12*y4 + 0.325*y5 + 0.325*y6 > 0.2514 | none
A.3.9  | upright | -sigma - 0.054*y2 - 0.054*y3 - 0.083*y4 - 0.054*y5 - 0.054*y6 > -0.59834 | none
A.3.10 | upright | sigma < -0.419351*sol + 0.079431*dih2 + 0.06904 - 0.0846*(y1 - 2.8) | none
A.3.11 | upright | sigma < 0.07*(y1 - 2.51) - 0.133*(y2 + y3 + y5 + y6 - 8) - 0.135*(y4 - 2) | y2 <= 2.13 & y3 <= 2.13

# halves of truncated quad clusters, y4 is the diagonal
A.4.1 | half | dih - 0.372*y1 + 0.465*y2 + 0.465*y3 + 0.465*y5 + 0.465*y6 > 4.885 | none
A.4.2 | half | -vor0 - 0.06*y2 - 0.06*y3 - 0.185*y5 - 0.185*y6 > -0.9978 | dih1 < 2.12 & y1 <= 2.26 & y2 <= 2.26 & y3 <= 2.26
A.4.3 | half | -vor0 + 0.419351*solA < 0.3072 | dih1 < 2.12 & y1 <= 2.26 & y2 <= 2.26 & y3 <= 2.26
A.4.4 | half | quo + 0.00758*y1 + 0.0115*y2 + 0.0115*y6 > 0.06333 | none

# quasi-regular tetrahedra under perimeter splits
A.6.1 | qrtet | sol + 0.377076*y1 + 0.377076*y2 + 0.377076*y3 - 0.221*y4 - 0.221*y5 - 0.221*y6 > 1.487741 | y4 + y5 + y6 <= 6.25
A.6.2 | qrtet | 0.221*y4 + 0.221*y5 + 0.221*y6 - sol > 0.76822 | y4 + y5 + y6 <= 6.25
A.6.3 | qrtet | dih + 0.34*y2 + 0.34*y3 - 0.689*y4 + 0.27*y5 + 0.27*y6 > 2.29295 | y4 + y5 + y6 <= 6.25
A.6.4 | qrtet | -dih + 0.498*y1 + 0.731*y4 - 0.212*y5 - 0.212*y6 > 0.37884 | y4 + y5 + y6 <= 6.25
A.6.5 | qrtet | -sigma - 0.109*y1 - 0.109*y2 - 0.109*y3 - 0.14135*y4 - 0.14135*y5 - 0.14135*y6 > -1.5574737 | y4 + y5 + y6 <= 6.25
A.6.6 | qrtet | -sigma - 0.419351*sol - 0.2*y1 - 0.2*y2 - 0.2*y3 - 0.048*y4 - 0.048*y5 - 0.048*y6 > -1.77465 | y4 + y5 + y6 <= 6.25
A.6.7 | qrtet | tau - 0.0845696*y1 - 0.0845696*y2 - 0.0845696*y3 - 0.163*y4 - 0.163*y5 - 0.163*y6 > -1.48542 | y4 + y5 + y6 <= 6.25
A.6.8 | qrtet | dih + 0.27*y2 + 0.27*y3 - 0.689*y4 + 0.27*y5 + 0.27*y6 > 2.01295 | y4 + y5 + y6 <= 6.25 & y1 <= 2.13 & y2 <= 2.13 & y3 <= 2.13
A.6.9 | qrtet | -sigma - 0.14135*y1 - 0.14135*y2 - 0.14135*y3 - 0.14135*y4 - 0.14135*y5 - 0.14135*y6 > -1.7515737 | y4 + y5 + y6 <= 6.25 & y1 <= 2.13 & y2 <= 2.13 & y3 <= 2.13
A.6.1' | qrtet | y4 + y5 + y6 > 6.25 | y4 + y5 + y6 >= 6.25
A.6.2' | qrtet | sol + 0.378*y1 + 0.378*y2 + 0.378*y3 - 0.1781*y4 - 0.1781*y5 - 0.1781*y6 > 1.761445 | y4 + y5 + y6 >= 6.25
A.6.3' | qrtet | -sol - 0.171*y1 - 0.171*y2 - 0.171*y3 + 0.3405*y4 + 0.3405*y5 + 0.3405*y6 > 0.489145 | y4 + y5 + y6 >= 6.25
A.6.4' | qrtet | -sigma - 0.1208*y1 - 0.1208*y2 - 0.1208*y3 - 0.0781*y4 - 0.0781*y5 - 0.0781*y6 > -1.2436 | y4 + y5 + y6 >= 6.25
A.6.5' | qrtet | -sigma - 0.419351*sol - 0.2*y1 - 0.2*y2 - 0.2*y3 + 0.0106*y4 + 0.0106*y5 + 0.0106*y6 > -1.40816 | y4 + y5 + y6 >= 6.25
A.6.6' | qrtet | sol + 0.356*y1 + 0.356*y2 + 0.356*y3 - 0.1781*y4 - 0.1781*y5 - 0.1781*y6 > 1.629445 | y4 + y5 + y6 >= 6.25 & y1 <= 2.13 & y2 <= 2.13 & y3 <= 2.13
A.6.7' | qrtet | -sol - 0.254*y1 - 0.254*y2 - 0.254*y3 + 0.3405*y4 + 0.3405*y5 + 0.3405*y6 > -0.008855 | y4 + y5 + y6 >= 6.25 & y1 <= 2.13 & y2 <= 2.13 & y3 <= 2.13
A.6.8' | qrtet | -sigma - 0.167*y1 - 0.167*y2 - 0.167*y3 - 0.0781*y4 - 0.0781*y5 - 0.0781*y6 > -1.51017 | y4 + y5 + y6 >= 6.25 & y1 <= 2.13 & y2 <= 2.13 & y3 <= 2.13

# truncated halves in the final analysis
A.8.1 | half | dih > 1.694 | y1 <= 2.13 & y2 <= 2.13 & y3 <= 2.13 & y2 + y3 + y5 + y6 <= 8.709 & y4 >= 2.93
A.8.2 | half | dih2 + 0.59*y1 + 0.1*y2 + 0.1*y3 + 0.55*y4 - 0.6*y5 - 0.12*y6 > 2.6506 | y1 <= 2.13 & y2 <= 2.13 & y3 <= 2.13 & y4 >= 2*sqrt2 & y4 <= 2.93 & y5 >= 2 & y5 <= 2.51 & y6 >= 2 & y6 <= 2.51
A.8.3 | half | dih2 + 0.35*y1 - 0.24*y2 + 0.05*y3 + 0.35*y4 - 0.72*y5 - 0.18*y6 < 0.47 | y1 <= 2.13 & y2 <= 2.13 & y3 <= 2.13 & y4 >= 2*sqrt2 & y4 <= 2.93 & y5 >= 2 & y5 <= 2.51 & y6 >= 2 & y6 <= 2.51
)CAT";

}  // namespace starbound
