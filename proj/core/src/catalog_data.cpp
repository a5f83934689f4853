#include "catalog_data.hpp"

namespace golden::detail {

// Row fields: id, family, dsl, integer parameters, rational parameters,
// constraints, anchor. Sign factors are always written (-1)^e.
const std::vector<CatalogRow>& catalog_rows() {
  static const std::vector<CatalogRow> rows = {
      // Powers of alpha and beta in the basis {1, alpha}.
      {"A1", "A", "alpha^n = alpha^(n-1) + alpha^(n-2)", "n", "", "",
       "eq.y9hcktl: alpha^n recurrence"},
      {"A2", "A", "beta^n = beta^(n-1) + beta^(n-2)", "n", "", "",
       "eq.wa1x3n6: beta^n recurrence"},
      {"A3", "A", "alpha^n = alpha*F(n) + F(n-1)", "n", "", "", "eq.hxtle1n: alpha^n in F"},
      {"A4", "A", "alpha^n*sqrt5 = alpha*L(n) + L(n-1)", "n", "", "",
       "eq.oos3hdl: alpha^n sqrt5 in L"},
      {"A5", "A", "beta^n = beta*F(n) + F(n-1)", "n", "", "", "eq.gt6xmho: beta^n in F"},
      {"A6", "A", "beta^n*sqrt5 = -beta*L(n) - L(n-1)", "n", "", "",
       "eq.nag65l1: beta^n sqrt5 in L"},
      {"A7", "A", "beta^n = -alpha*F(n) + F(n+1)", "n", "", "",
       "eq.eu0zd8d: beta^n in alpha basis"},
      {"A8", "A", "beta^n*sqrt5 = alpha*L(n) - L(n+1)", "n", "", "",
       "eq.eadpgp1: beta^n sqrt5 in alpha basis"},
      {"A9", "A", "alpha^(-n) = (-1)^(n-1)*alpha*F(n) + (-1)^n*F(n+1)", "n", "", "",
       "eq.huo1cwh: negative powers of alpha"},
      {"A10", "A", "beta^(-n) = (-1)^n*alpha*F(n) + (-1)^n*F(n-1)", "n", "", "",
       "eq.rl4090d: negative powers of beta"},

      // Hoggatt's identity times alpha^s and its index interchanges.
      {"B1", "B", "alpha^s*F(k+t) = alpha^(s+k)*F(t) + (-1)^t*alpha^(s-t)*F(k)", "s,k,t", "",
       "", "eq.snj8qge: Hoggatt identity times alpha^s"},
      {"B2", "B", "alpha^s*F(k+t) = alpha^(s+t)*F(k) + (-1)^k*alpha^(s-k)*F(t)", "s,k,t", "",
       "", "eq.nfsaicr: k and t interchanged"},
      {"B3", "B", "alpha^k*F(s+t) = alpha^(s+k)*F(t) + (-1)^t*alpha^(k-t)*F(s)", "s,k,t", "",
       "", "eq.mnoup5u (first): k and s interchanged"},
      {"B4", "B", "alpha^(s-t)*F(k) = alpha^(k-t)*F(s) + (-1)^s*alpha^(-t)*F(k-s)", "s,k,t",
       "", "", "eq.mnoup5u (second): t and -s interchanged"},

      // Binomial illustration.
      {"C1", "C", "sum(j=0..n, binom(n,j)*F(p)^j*F(p-1)^(n-j)*F(j+q)) = F(n*p+q)", "n,p,q",
       "", "n >= 0", "eq.c5vjr47: binomial sum of F"},
      {"C2", "C", "sum(j=0..n, binom(n,j)*F(p)^j*F(p-1)^(n-j)*L(j+q)) = L(n*p+q)", "n,p,q",
       "", "n >= 0", "eq.il7kcyt: binomial sum of L"},
      {"C3", "C", "sum(j=0..n, binom(n,j)*alpha^(j+q)*F(p)^j*F(p-1)^(n-j)) = alpha^(n*p+q)",
       "n,p,q", "", "n >= 0", "eq.n68cvcs: binomial sum in the ring"},

      // Addition and subtraction formulas.
      {"D1", "D", "F(p+q) = F(p)*F(q+1) + F(p-1)*F(q)", "p,q", "", "",
       "eq.uhyuo34: Fibonacci addition formula"},
      {"D2", "D", "(-1)^q*F(p-q) = F(p)*F(q-1) - F(p-1)*F(q)", "p,q", "", "",
       "eq.zckqqm5: Fibonacci subtraction formula"},
      {"D3", "D", "L(p+q) = F(p)*L(q+1) + F(p-1)*L(q)", "p,q", "", "",
       "eq.rr17kpl: Lucas addition formula"},
      {"D4", "D", "5*F(p+q) = L(p)*L(q+1) + L(p-1)*L(q)", "p,q", "", "",
       "5F(p+q) from a product of two sqrt5 forms"},

      // Multiplication formulas.
      {"E1", "E", "F(t)*(F(s+k) - (-1)^k*F(s-k)) = F(k)*(F(s+t) - (-1)^t*F(s-t))", "s,t,k",
       "", "", "eq.qvcfdjb: Fibonacci multiplication formula"},
      {"E2", "E", "F(t)*L(s) = F(s+t) - (-1)^t*F(s-t)", "s,t", "", "",
       "F(t)L(s), the case k = 1"},
      {"E3", "E", "F(t)*(L(s+k) - (-1)^k*L(s-k)) = F(k)*(L(s+t) - (-1)^t*L(s-t))", "s,t,k",
       "", "", "eq.qrx0rof: Lucas multiplication formula"},
      {"E4", "E", "5*F(t)*F(s) = L(s+t) - (-1)^t*L(s-t)", "s,t", "", "",
       "eq.es6bhhx: 5F(t)F(s)"},
      {"E5", "E",
       "2*F(k+t)*F(s) = F(t)*(F(s+k) + (-1)^k*F(s-k)) + F(k)*(F(s+t) + (-1)^t*F(s-t))",
       "s,t,k", "", "", "2F(k+t)F(s) from the sum of the Hoggatt forms"},
      {"E6", "E", "L(t)*F(s) = F(s+t) + (-1)^t*F(s-t)", "s,t", "", "",
       "eq.jfoym63 (first): L(t)F(s)"},
      {"E7", "E",
       "2*F(k+t)*L(s) = F(t)*(L(s+k) + (-1)^k*L(s-k)) + F(k)*(L(s+t) + (-1)^t*L(s-t))",
       "s,t,k", "", "", "2F(k+t)L(s) from the sum of the Hoggatt forms"},
      {"E8", "E", "L(t)*L(s) = L(s+t) + (-1)^t*L(s-t)", "s,t", "", "",
       "eq.jfoym63 (second): L(t)L(s)"},

      // Cassini, Catalan and general addition.
      {"F1", "F", "F(n-1)*F(n+1) = F(n)^2 + (-1)^n", "n", "", "",
       "eq.wk4gkn2: Cassini identity"},
      {"F2", "F", "L(n-1)*L(n+1) - L(n)^2 = (-1)^(n-1)*5", "n", "", "",
       "Lucas form of Cassini"},
      {"F3", "F", "F(s)^2 = F(s+k)*F(s-k) + (-1)^(s+k)*F(k)^2", "s,k", "", "",
       "Catalan identity"},
      {"F4", "F", "F(s)*F(k+t) = F(s+k)*F(t) + (-1)^t*F(s-t)*F(k)", "s,k,t", "", "",
       "eq.wo5odhd: general Fibonacci addition"},
      {"F5", "F", "L(s)*F(k+t) = L(s+k)*F(t) + (-1)^t*L(s-t)*F(k)", "s,k,t", "", "",
       "eq.tzz9m9p: general Lucas addition"},
      {"F6", "F", "F(2*s) = L(s+k)*F(s-k) + (-1)^(s+k)*F(2*k)", "s,k", "", "",
       "F(2s), the case t = s - k of the Lucas form"},

      // Sums with subscripts in arithmetic progression.
      {"G1", "G",
       "sum(j=0..n, F(p*j+q)) = (F(p)*(F(p*n+p+q-1) - F(q-1)) - (F(p-1) - 1)*(F(p*n+p+q) - "
       "F(q)))/(L(p) - 1 + (-1)^(p-1))",
       "p,q,n", "", "p != 0, n >= 0", "sum of F over an arithmetic progression"},
      {"G2", "G",
       "sum(j=0..n, L(p*j+q)) = (F(p)*(L(p*n+p+q-1) - L(q-1)) - (F(p-1) - 1)*(L(p*n+p+q) - "
       "L(q)))/(L(p) - 1 + (-1)^(p-1))",
       "p,q,n", "", "p != 0, n >= 0", "sum of L over an arithmetic progression"},

      // Three-index addition.
      {"I1", "I",
       "F(p+q+r) = F(q-1)*F(r)*F(p-1) + (F(q+1)*F(r) + F(q-1)*F(r-1))*F(p) + "
       "F(q)*F(r+1)*F(p+1)",
       "p,q,r", "", "", "eq.u6g3quu: F(p+q+r)"},
      {"I2", "I",
       "F(p+q+r) = F(p-1)*F(r)*F(q-1) + (F(p+1)*F(r) + F(p-1)*F(r-1))*F(q) + "
       "F(p)*F(r+1)*F(q+1)",
       "p,q,r", "", "", "eq.hsiqhgv: F(p+q+r), p and q interchanged"},
      {"I3", "I",
       "F(p+q+r) = F(q-1)*F(p)*F(r-1) + (F(q+1)*F(p) + F(q-1)*F(p-1))*F(r) + "
       "F(q)*F(p+1)*F(r+1)",
       "p,q,r", "", "", "F(p+q+r), p and r interchanged"},
      {"I4", "I",
       "F(p+q+r) = F(r-1)*F(q)*F(p-1) + (F(r+1)*F(q) + F(r-1)*F(q-1))*F(p) + "
       "F(r)*F(q+1)*F(p+1)",
       "p,q,r", "", "", "eq.j54wavw: F(p+q+r), q and r interchanged"},
      {"I5", "I",
       "L(p+q+r) = F(q-1)*F(r)*L(p-1) + (F(q+1)*F(r) + F(q-1)*F(r-1))*L(p) + "
       "F(q)*F(r+1)*L(p+1)",
       "p,q,r", "", "", "L(p+q+r)"},
      {"I6", "I",
       "L(p+q+r) = F(p-1)*F(r)*L(q-1) + (F(p+1)*F(r) + F(p-1)*F(r-1))*L(q) + "
       "F(p)*F(r+1)*L(q+1)",
       "p,q,r", "", "", "L(p+q+r), p and q interchanged"},
      {"I7", "I",
       "L(p+q+r) = F(q-1)*F(p)*L(r-1) + (F(q+1)*F(p) + F(q-1)*F(p-1))*L(r) + "
       "F(q)*F(p+1)*L(r+1)",
       "p,q,r", "", "", "L(p+q+r), p and r interchanged"},
      {"I8", "I",
       "L(p+q+r) = F(r-1)*F(q)*L(p-1) + (F(r+1)*F(q) + F(r-1)*F(q-1))*L(p) + "
       "F(r)*F(q+1)*L(p+1)",
       "p,q,r", "", "", "L(p+q+r), q and r interchanged"},
      {"I9", "I",
       "5*F(p+q+r) = L(q-1)*L(r)*F(p-1) + (L(q+1)*L(r) + L(q-1)*L(r-1))*F(p) + "
       "L(q)*L(r+1)*F(p+1)",
       "p,q,r", "", "", "5F(p+q+r)"},
      {"I10", "I",
       "5*F(p+q+r) = L(p-1)*L(r)*F(q-1) + (L(p+1)*L(r) + L(p-1)*L(r-1))*F(q) + "
       "L(p)*L(r+1)*F(q+1)",
       "p,q,r", "", "", "5F(p+q+r), p and q interchanged"},
      {"I11", "I",
       "5*F(p+q+r) = L(q-1)*L(p)*F(r-1) + (L(q+1)*L(p) + L(q-1)*L(p-1))*F(r) + "
       "L(q)*L(p+1)*F(r+1)",
       "p,q,r", "", "", "5F(p+q+r), p and r interchanged"},
      {"I12", "I",
       "5*F(p+q+r) = L(r-1)*L(q)*F(p-1) + (L(r+1)*L(q) + L(r-1)*L(q-1))*F(p) + "
       "L(r)*L(q+1)*F(p+1)",
       "p,q,r", "", "", "5F(p+q+r), q and r interchanged"},
      {"I13", "I",
       "5*L(p+q+r) = L(q-1)*L(r)*L(p-1) + (L(q+1)*L(r) + L(q-1)*L(r-1))*L(p) + "
       "L(q)*L(r+1)*L(p+1)",
       "p,q,r", "", "", "5L(p+q+r)"},
      {"I14", "I",
       "5*L(p+q+r) = L(p-1)*L(r)*L(q-1) + (L(p+1)*L(r) + L(p-1)*L(r-1))*L(q) + "
       "L(p)*L(r+1)*L(q+1)",
       "p,q,r", "", "", "5L(p+q+r), p and q interchanged"},
      {"I15", "I",
       "5*L(p+q+r) = L(q-1)*L(p)*L(r-1) + (L(q+1)*L(p) + L(q-1)*L(p-1))*L(r) + "
       "L(q)*L(p+1)*L(r+1)",
       "p,q,r", "", "", "5L(p+q+r), p and r interchanged"},
      {"I16", "I",
       "5*L(p+q+r) = L(r-1)*L(q)*L(p-1) + (L(r+1)*L(q) + L(r-1)*L(q-1))*L(p) + "
       "L(r)*L(q+1)*L(p+1)",
       "p,q,r", "", "", "eq.y5dseg8: 5L(p+q+r), q and r interchanged"},

      // Four-term products.
      {"J1", "J",
       "F(p+q-r)*F(t-s+r) + F(p+q-r-1)*F(t-s+r-1) = F(p-s)*F(t+q) + F(p-s-1)*F(t+q-1)",
       "p,q,r,s,t", "", "", "eq.qbbejfn: FF products"},
      {"J2", "J",
       "F(p+q-r)*L(t-s+r) + F(p+q-r-1)*L(t-s+r-1) = F(p-s)*L(t+q) + F(p-s-1)*L(t+q-1)",
       "p,q,r,s,t", "", "", "eq.aiu1z6u: FL products"},
      {"J3", "J",
       "L(p+q-r)*F(t-s+r) + L(p+q-r-1)*F(t-s+r-1) = L(p-s)*F(t+q) + L(p-s-1)*F(t+q-1)",
       "p,q,r,s,t", "", "", "eq.a12i18b: LF products"},
      {"J4", "J",
       "L(p+q-r)*L(t-s+r) + L(p+q-r-1)*L(t-s+r-1) = L(p-s)*L(t+q) + L(p-s-1)*L(t+q-1)",
       "p,q,r,s,t", "", "", "eq.yo685jl: LL products"},

      // Generic binomial identities in rationals x, y.
      {"K1", "K", "sum(j=0..n, binom(n,j)*y^j*x^(n-j)) = (x+y)^n", "n", "x,y", "n >= 1",
       "eq.g81atqv: binomial theorem"},
      {"K2", "K", "sum(j=0..n, (-1)^j*binom(n,j)*(x+y)^j*x^(n-j)) = (-1)^n*y^n", "n", "x,y",
       "n >= 1", "eq.xmac84j: alternating binomial sum"},
      {"K3", "K", "sum(j=0..n, (-1)^j*binom(n,j)*y^j*(x+y)^(n-j)) = x^n", "n", "x,y",
       "n >= 1", "eq.y8wpfl4: alternating binomial sum"},
      {"K4", "K", "sum(j=0..n, binom(n,j)*j*y^(j-1)*x^(n-j)) = n*(x+y)^(n-1)", "n", "x,y",
       "n >= 1", "eq.gt826zn: differentiated binomial sum"},
      {"K5", "K",
       "sum(j=0..n, (-1)^j*binom(n,j)*j*(x+y)^(j-1)*x^(n-j)) = (-1)^n*n*y^(n-1)", "n",
       "x,y", "n >= 1", "eq.r7394o5: differentiated alternating sum"},
      {"K6", "K",
       "sum(j=1..n, (-1)^(j-1)*binom(n,j)*y^(j-1)*j*(x+y)^(n-j)) = n*x^(n-1)", "n", "x,y",
       "n >= 1", "eq.c0t71uc: differentiated alternating sum"},

      // Binomial sums of Fibonacci and Lucas numbers.
      {"L1", "L",
       "sum(j=0..n, (-1)^(t*j)*binom(n,j)*F(k)^j*F(t)^(n-j)*F((s+k)*n-(t+k)*j)) = "
       "F(t+k)^n*F(s*n)",
       "k,t,s,n", "", "n >= 1", "eq.rrfqs7d"},
      {"L2", "L",
       "sum(j=0..n, (-1)^(t*j)*binom(n,j)*F(k)^j*F(t)^(n-j)*L((s+k)*n-(t+k)*j)) = "
       "F(t+k)^n*L(s*n)",
       "k,t,s,n", "", "n >= 1", "eq.k3iof5p"},
      {"L3", "L",
       "sum(j=0..n, (-1)^j*binom(n,j)*F(k+t)^j*F(t)^(n-j)*F((s+k)*n-k*j)) = "
       "(-1)^(n*(t+1))*F(k)^n*F(n*(s-t))",
       "k,t,s,n", "", "n >= 1", "eq.hitv5kd"},
      {"L4", "L",
       "sum(j=0..n, (-1)^j*binom(n,j)*F(k+t)^j*F(t)^(n-j)*L((s+k)*n-k*j)) = "
       "(-1)^(n*(t+1))*F(k)^n*L(n*(s-t))",
       "k,t,s,n", "", "n >= 1", "Lucas companion of eq.hitv5kd"},
      {"L5", "L",
       "sum(j=0..n, (-1)^((t+1)*j)*binom(n,j)*F(k)^j*F(k+t)^(n-j)*F(s*n-t*j)) = "
       "F(t)^n*F(n*(s+k))",
       "k,t,s,n", "", "n >= 1", "binomial sum with F(s n - t j)"},
      {"L6", "L",
       "sum(j=0..n, (-1)^((t+1)*j)*binom(n,j)*F(k)^j*F(k+t)^(n-j)*L(s*n-t*j)) = "
       "F(t)^n*L(n*(s+k))",
       "k,t,s,n", "", "n >= 1", "binomial sum with L(s n - t j)"},
      {"L7", "L",
       "(-1)^t*sum(j=1..n, (-1)^(t*j)*binom(n,j)*j*F(k)^(j-1)*F(t)^(n-j)*"
       "F((k+s)*n+t-s-(k+t)*j)) = n*F(k+t)^(n-1)*F(s*(n-1))",
       "k,t,s,n", "", "n >= 1", "weighted binomial sum of F"},
      {"L8", "L",
       "(-1)^t*sum(j=1..n, (-1)^(t*j)*binom(n,j)*j*F(k)^(j-1)*F(t)^(n-j)*"
       "L((k+s)*n+t-s-(k+t)*j)) = n*F(k+t)^(n-1)*L(s*(n-1))",
       "k,t,s,n", "", "n >= 1", "weighted binomial sum of L"},
      {"L9", "L",
       "sum(j=1..n, (-1)^j*binom(n,j)*j*F(k+t)^(j-1)*F(t)^(n-j)*F((k+s)*n-s-k*j)) = "
       "(-1)^(n*(t+1)+t)*n*F(k)^(n-1)*F((s-t)*(n-1))",
       "k,t,s,n", "", "n >= 1", "weighted alternating binomial sum of F"},
      {"L10", "L",
       "sum(j=1..n, (-1)^j*binom(n,j)*j*F(k+t)^(j-1)*F(t)^(n-j)*L((k+s)*n-s-k*j)) = "
       "(-1)^(n*(t+1)+t)*n*F(k)^(n-1)*L((s-t)*(n-1))",
       "k,t,s,n", "", "n >= 1", "weighted alternating binomial sum of L"},
      {"L11", "L",
       "(-1)^(t+1)*sum(j=1..n, (-1)^((t+1)*j)*binom(n,j)*j*F(k)^(j-1)*F(k+t)^(n-j)*"
       "F(s*(n-1)+t-t*j)) = n*F(t)^(n-1)*F((s+k)*(n-1))",
       "k,t,s,n", "", "n >= 1", "weighted binomial sum with F(s(n-1) + t - t j)"},
      {"L12", "L",
       "(-1)^(t+1)*sum(j=1..n, (-1)^((t+1)*j)*binom(n,j)*j*F(k)^(j-1)*F(k+t)^(n-j)*"
       "L(s*(n-1)+t-t*j)) = n*F(t)^(n-1)*L((s+k)*(n-1))",
       "k,t,s,n", "", "n >= 1", "eq.igepvk1"},

      // Jennings-type sums in rationals.
      {"M1", "M",
       "sum(j=0..n, (2*n+1)/(n+j+1)*binom(n+j+1,2*j+1)*(x*y)^(r-j)*(x-y)^(2*j+1)) = "
       "x^(r+n+1)*y^(r-n) - y^(r+n+1)*x^(r-n)",
       "r,n", "x,y", "n >= 0", "eq.z4ctfaa"},
      {"M2", "M",
       "sum(j=0..n, (2*n+1)/(n+j+1)*binom(n+j+1,2*j+1)*(x*(x-y))^(r-j)*y^(2*j+1)) = "
       "x^(r+n+1)*(x-y)^(r-n) - (x-y)^(r+n+1)*x^(r-n)",
       "r,n", "x,y", "n >= 0", "eq.tqhg3b9: y replaced by x - y"},
      {"M3", "M",
       "sum(j=0..n, (2*n+1)/(n+j+1)*binom(n+j+1,2*j+1)*(y*(y-x))^(r-j)*x^(2*j+1)) = "
       "y^(r+n+1)*(y-x)^(r-n) - (y-x)^(r+n+1)*y^(r-n)",
       "r,n", "x,y", "n >= 0", "eq.cju184j: x and y interchanged"},
      {"M4", "M",
       "sum(j=0..n, (2*n+1)/(n+j+1)*binom(n+j+1,2*j+1)*((z^2-1)/z)^(2*j)) = "
       "(z^2*z^(2*n) - z^(-2*n))/(z^2-1)",
       "n", "z", "n >= 0, z != 0, z != 1, z != -1", "eq.i42bggo: Jennings identity"},

      // Jennings-type sums of Fibonacci and Lucas numbers.
      {"N1", "N",
       "(-1)^t*sum(j=0..n, (2*n+1)/(n+j+1)*binom(n+j+1,2*j+1)*(F(k+t)*F(t))^(r-j)*"
       "F(k)^(2*j+1)*F(r*(2*s+k)+s-t-(2*t+k)*j)) = F(k+t)^(r+n+1)*F(t)^(r-n)*"
       "F(s*(r+n+1)+(s+k)*(r-n)) - F(t)^(r+n+1)*F(k+t)^(r-n)*F((s+k)*(r+n+1)+s*(r-n))",
       "n,s,k,r,t", "", "n >= 0", "eq.ick3pfg"},
      {"N2", "N",
       "(-1)^t*sum(j=0..n, (2*n+1)/(n+j+1)*binom(n+j+1,2*j+1)*(F(k+t)*F(t))^(r-j)*"
       "F(k)^(2*j+1)*L(r*(2*s+k)+s-t-(2*t+k)*j)) = F(k+t)^(r+n+1)*F(t)^(r-n)*"
       "L(s*(r+n+1)+(s+k)*(r-n)) - F(t)^(r+n+1)*F(k+t)^(r-n)*L((s+k)*(r+n+1)+s*(r-n))",
       "n,s,k,r,t", "", "n >= 0", "Lucas companion of eq.ick3pfg"},
      {"N3", "N",
       "sum(j=0..n, (-1)^(t*j)*(2*n+1)/(n+j+1)*binom(n+j+1,2*j+1)*(F(k+t)*F(k))^(r-j)*"
       "F(t)^(2*j+1)*F(r*(2*s-t)+s+k+(2*k+t)*j)) = (-1)^(t*n)*F(k+t)^(r+n+1)*F(k)^(r-n)*"
       "F(s*(2*r+1)-t*(r-n)) - (-1)^(t*n+t)*F(k)^(r+n+1)*F(k+t)^(r-n)*"
       "F(s*(2*r+1)-t*(r+n+1))",
       "n,s,k,r,t", "", "n >= 0", "Jennings-type sum with F(k+t)F(k) base"},
      {"N4", "N",
       "sum(j=0..n, (-1)^(t*j)*(2*n+1)/(n+j+1)*binom(n+j+1,2*j+1)*(F(k+t)*F(k))^(r-j)*"
       "F(t)^(2*j+1)*L(r*(2*s-t)+s+k+(2*k+t)*j)) = (-1)^(t*n)*F(k+t)^(r+n+1)*F(k)^(r-n)*"
       "L(s*(2*r+1)-t*(r-n)) - (-1)^(t*n+t)*F(k)^(r+n+1)*F(k+t)^(r-n)*"
       "L(s*(2*r+1)-t*(r+n+1))",
       "n,s,k,r,t", "", "n >= 0", "Lucas companion of the F(k+t)F(k) sum"},
      {"N5", "N",
       "sum(j=0..n, (-1)^((t-1)*j)*(2*n+1)/(n+j+1)*binom(n+j+1,2*j+1)*(F(t)*F(k))^(r-j)*"
       "F(k+t)^(2*j+1)*F(s*(2*r+1)+(k-t)*r-(k-t)*j)) = (-1)^((t-1)*n)*F(t)^(r+n+1)*"
       "F(k)^(r-n)*F(s*(2*r+1)+k*(r+n+1)+t*(n-r)) - (-1)^((t-1)*(n+1))*F(k)^(r+n+1)*"
       "F(t)^(r-n)*F(s*(2*r+1)-k*(n-r)-t*(r+n+1))",
       "n,s,k,r,t", "", "n >= 0", "Jennings-type sum with F(t)F(k) base"},
      {"N6", "N",
       "sum(j=0..n, (-1)^((t-1)*j)*(2*n+1)/(n+j+1)*binom(n+j+1,2*j+1)*(F(t)*F(k))^(r-j)*"
       "F(k+t)^(2*j+1)*L(s*(2*r+1)+(k-t)*r-(k-t)*j)) = (-1)^((t-1)*n)*F(t)^(r+n+1)*"
       "F(k)^(r-n)*L(s*(2*r+1)+k*(r+n+1)+t*(n-r)) - (-1)^((t-1)*(n+1))*F(k)^(r+n+1)*"
       "F(t)^(r-n)*L(s*(2*r+1)-k*(n-r)-t*(r+n+1))",
       "n,s,k,r,t", "", "n >= 0", "eq.l7ndcj9"},

      // Alternating sums from the three-term recurrence lemma.
      {"P1", "P",
       "(-1)^(n*k+t-1)*F(k)*sum(j=0..n, (-1)^(k*j)*F(n*(s-k)+s-t+2*k*j)) = "
       "F(t)*F((s+k)*(n+1)) - F(t+(n+1)*k)*F(s*(n+1))",
       "n,k,s,t", "", "n >= 0", "eq.elbr7d1"},
      {"P2", "P",
       "(-1)^(n*k+t-1)*F(k)*sum(j=0..n, (-1)^(k*j)*L(n*(s-k)+s-t+2*k*j)) = "
       "F(t)*L((s+k)*(n+1)) - F(t+(n+1)*k)*L(s*(n+1))",
       "n,k,s,t", "", "n >= 0", "eq.zpc3vyq"},
      {"P3", "P",
       "(-1)^(n*t+k-1)*F(t)*sum(j=0..n, (-1)^(t*j)*F(n*(s-t)+s-k+2*t*j)) = "
       "F(k)*F((s+t)*(n+1)) - F(k+(n+1)*t)*F(s*(n+1))",
       "n,k,s,t", "", "n >= 0", "eq.t1gk197: k and t interchanged"},
      {"P4", "P",
       "(-1)^(n*t+k-1)*F(t)*sum(j=0..n, (-1)^(t*j)*L(n*(s-t)+s-k+2*t*j)) = "
       "F(k)*L((s+t)*(n+1)) - F(k+(n+1)*t)*L(s*(n+1))",
       "n,k,s,t", "", "n >= 0", "Lucas form, k and t interchanged"},
      {"P5", "P",
       "(-1)^(n*s+t-1)*F(s)*sum(j=0..n, (-1)^(s*j)*F(n*(k-s)+k-t+2*s*j)) = "
       "F(t)*F((k+s)*(n+1)) - F(t+(n+1)*s)*F(k*(n+1))",
       "n,k,s,t", "", "n >= 0", "s and k interchanged"},
      {"P6", "P",
       "(-1)^(n*s+t-1)*F(s)*sum(j=0..n, (-1)^(s*j)*L(n*(k-s)+k-t+2*s*j)) = "
       "F(t)*L((k+s)*(n+1)) - F(t+(n+1)*s)*L(k*(n+1))",
       "n,k,s,t", "", "n >= 0", "eq.o9gxedr: Lucas form, s and k interchanged"},

      // Geometric sums in rationals.
      {"Q1", "Q", "(x-y)*sum(j=0..n, y^(r-j)*x^j) = y^(r-n)*x^(n+1) - y^(r+1)", "r,n", "x,y",
       "n >= 0", "eq.bdoy5wn: geometric sum"},
      {"Q2", "Q", "x*sum(j=0..n, y^(r-j)*(x+y)^j) = y^(r-n)*(x+y)^(n+1) - y^(r+1)", "r,n",
       "x,y", "n >= 0", "eq.jes4tt5: x replaced by x + y"},
      {"Q3", "Q", "(x-y)*sum(j=0..n, x^(r-j)*y^j) = x^(r+1) - x^(r-n)*y^(n+1)", "r,n", "x,y",
       "n >= 0", "eq.k66s9zf: x and y interchanged"},

      // Geometric sums of Fibonacci and Lucas numbers.
      {"R1", "R",
       "(-1)^t*F(k)*sum(j=0..n, F(k+t)^j*F(t)^(r-j)*F(r*(s+k)+s-t-k*j)) = "
       "F(t)^(r-n)*F(k+t)^(n+1)*F(s*(r+1)+k*(r-n)) - F(t)^(r+1)*F((s+k)*(r+1))",
       "r,n,s,k,t", "", "n >= 0", "eq.wdxi1rj"},
      {"R2", "R",
       "(-1)^t*F(k)*sum(j=0..n, F(k+t)^j*F(t)^(r-j)*L(r*(s+k)+s-t-k*j)) = "
       "F(t)^(r-n)*F(k+t)^(n+1)*L(s*(r+1)+k*(r-n)) - F(t)^(r+1)*L((s+k)*(r+1))",
       "r,n,s,k,t", "", "n >= 0", "eq.tsf4k42"},
      {"R3", "R",
       "(-1)^(r*t)*F(t)*sum(j=0..n, (-1)^(t*j)*F(k)^(r-j)*F(k+t)^j*F(r*(s-t)+s+k+t*j)) = "
       "(-1)^(t*(r-n))*F(k)^(r-n)*F(k+t)^(n+1)*F(r*(s-t)+t*n+s) - (-1)^(t*(r+1))*F(k)^(r+1)*"
       "F((s-t)*(r+1))",
       "r,n,s,k,t", "", "n >= 0", "eq.cnhy6p9"},
      {"R4", "R",
       "(-1)^(r*t)*F(t)*sum(j=0..n, (-1)^(t*j)*F(k)^(r-j)*F(k+t)^j*L(r*(s-t)+s+k+t*j)) = "
       "(-1)^(t*(r-n))*F(k)^(r-n)*F(k+t)^(n+1)*L(r*(s-t)+t*n+s) - (-1)^(t*(r+1))*F(k)^(r+1)*"
       "L((s-t)*(r+1))",
       "r,n,s,k,t", "", "n >= 0", "eq.wchqq81"},
      {"R5", "R",
       "(-1)^t*F(k)*sum(j=0..n, F(k+t)^(r-j)*F(t)^j*F(s*(r+1)-t+k*j)) = "
       "F(k+t)^(r+1)*F(s*(r+1)) - F(k+t)^(r-n)*F(t)^(n+1)*F(s*(r+1)+k*(n+1))",
       "r,n,s,k,t", "", "n >= 0", "eq.gyojmdp"},
      {"R6", "R",
       "(-1)^t*F(k)*sum(j=0..n, F(k+t)^(r-j)*F(t)^j*L(s*(r+1)-t+k*j)) = "
       "F(k+t)^(r+1)*L(s*(r+1)) - F(k+t)^(r-n)*F(t)^(n+1)*L(s*(r+1)+k*(n+1))",
       "r,n,s,k,t", "", "n >= 0", "eq.y23kxxt"},

      // Weighted sums over an arithmetic progression.
      {"S1", "S",
       "sum(j=0..n, j*F(p*j+q)) = (n+1)*(F(p)*F(p*(n+1)+q-1) - (F(p-1) - 1)*F(p*(n+1)+q))/"
       "(L(p) - 1 + (-1)^(p-1)) + (F(2*p) - 2*F(p))*(F(p*(n+2)+q-1) - F(p+q-1))/"
       "((F(2*p-1) - 2*F(p-1) + 1)*(F(2*p+1) - 2*F(p+1) + 1) - (F(2*p) - 2*F(p))^2) - "
       "(F(2*p-1) - 2*F(p-1) + 1)*(F(p*(n+2)+q) - F(p+q))/"
       "((F(2*p-1) - 2*F(p-1) + 1)*(F(2*p+1) - 2*F(p+1) + 1) - (F(2*p) - 2*F(p))^2)",
       "p,q,n", "", "p != 0, n >= 0", "weighted sum of F over an arithmetic progression"},
      {"S2", "S",
       "sum(j=0..n, j*L(p*j+q)) = (n+1)*(F(p)*L(p*(n+1)+q-1) - (F(p-1) - 1)*L(p*(n+1)+q))/"
       "(L(p) - 1 + (-1)^(p-1)) + (F(2*p) - 2*F(p))*(L(p*(n+2)+q-1) - L(p+q-1))/"
       "((F(2*p-1) - 2*F(p-1) + 1)*(F(2*p+1) - 2*F(p+1) + 1) - (F(2*p) - 2*F(p))^2) - "
       "(F(2*p-1) - 2*F(p-1) + 1)*(L(p*(n+2)+q) - L(p+q))/"
       "((F(2*p-1) - 2*F(p-1) + 1)*(F(2*p+1) - 2*F(p+1) + 1) - (F(2*p) - 2*F(p))^2)",
       "p,q,n", "", "p != 0, n >= 0", "weighted sum of L over an arithmetic progression"},

      // Fibonacci-like sequences.
      {"T1", "T", "F(s-t)*G(k+m) = F(m-t)*G(k+s) + (-1)^(s+t+1)*F(m-s)*G(k+t)", "s,t,k,m",
       "", "", "three-term relation for a Fibonacci-like sequence"},
      {"T2", "T",
       "F(s-t)*alpha^(k+m) = F(m-t)*alpha^(k+s) + (-1)^(s+t+1)*F(m-s)*alpha^(k+t)",
       "s,t,k,m", "", "", "eq.n44ackt: the relation for powers of alpha"},
      {"T3", "T", "F(s-t)*beta^(k+m) = F(m-t)*beta^(k+s) + (-1)^(s+t+1)*F(m-s)*beta^(k+t)",
       "s,t,k,m", "", "", "eq.m7m7v0c: the relation for powers of beta"},
      {"T4", "T",
       "sum(j=0..n, (-1)^((s+t+1)*j)*binom(n,j)*F(m-s)^j*F(m-t)^(n-j)*F((s+k)*n+p+(t-s)*j)) "
       "= F(s-t)^n*F((k+m)*n+p)",
       "s,t,k,m,p,n", "", "n >= 0", "binomial sum from the Fibonacci-like relation"},
      {"T5", "T",
       "sum(j=0..n, (-1)^((s+t+1)*j)*binom(n,j)*F(m-s)^j*F(m-t)^(n-j)*L((s+k)*n+p+(t-s)*j)) "
       "= F(s-t)^n*L((k+m)*n+p)",
       "s,t,k,m,p,n", "", "n >= 0", "Lucas binomial sum from the Fibonacci-like relation"},
  };
  return rows;
}

const std::vector<SeriesRow>& series_rows() {
  static const std::vector<SeriesRow> rows = {
      {"H1", "H",
       "(1 - L(p)*y + (-1)^p*y^2)*sum(j=0..n, F(p*j+q)*y^j) = F(q) + (-1)^q*F(p-q)*y", "p,q",
       "eq.pqhgv3t: generating function of F(pj+q)", "y", "n", SeriesKind::Fib},
      {"H2", "H",
       "(1 - L(p)*y + (-1)^p*y^2)*sum(j=0..n, L(p*j+q)*y^j) = L(q) - (-1)^q*L(p-q)*y", "p,q",
       "eq.sdhqsd6: generating function of L(pj+q)", "y", "n", SeriesKind::Lucas},
  };
  return rows;
}

}  // namespace golden::detail
