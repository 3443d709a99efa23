#include "roseman/formula.hpp"

namespace roseman {

// One entry per generator kind and variant. Kinds without a triple-point
// index are listed once under [--] and shared by all four variants.
const std::string& standard_table_text() {
  static const std::string text = R"TABLE(
[--] a21(x,i) = mu a11(um(x),i) + a11(up(x),i) - a11(um(x),o(x)) a11(o(x),i)

[--] a12(i,x) = - a11(i,um(x)) - mu a11(i,up(x)) + a11(i,o(x)) a11(o(x),um(x))

[--] a22(x,y) = mu a12(um(x),y) + a12(up(x),y) - a11(um(x),o(x)) a12(o(x),y) + a21(x,um(y)) + mu
    a21(x,up(y)) - a21(x,o(y)) a11(o(y),um(y))

[--] a2(x) = mu a21(x,up(x)) + mu a12(um(x),x) - a11(um(x),o(x)) a12(o(x),x)

[--] a31(p,i) = mu a21(tbm(p),i) + a21(tbp(p),i) - a21(tbm(p),mp(p)) a11(mp(p),i) - mu
    a21(mbm(p),i) - a21(mbp(p),i) + a21(mbm(p),t(p)) a11(t(p),i) - a11(bmm(p),mm(p))
    a21(tm(p),i) - a12(bmm(p),tm(p)) a11(mp(p),i) + mu^-1 a11(bmm(p),t(p)) a12(t(p),tm(p))
    a11(mp(p),i)

[--] a13(i,p) = a12(i,tbm(p)) + mu a12(i,tbp(p)) - a11(i,mp(p)) a12(mp(p),tbm(p)) -
    a12(i,mbm(p)) - mu a12(i,mbp(p)) + a11(i,t(p)) a12(t(p),mbm(p)) - a12(i,tm(p))
    a11(mm(p),bmm(p)) - a11(i,mp(p)) a21(tm(p),bmm(p)) + a11(i,mp(p)) a21(tm(p),t(p))
    a11(t(p),bmm(p))

[--] a32(p,x) = mu a22(tbm(p),x) + a22(tbp(p),x) - a21(tbm(p),mp(p)) a12(mp(p),x) - mu
    a22(mbm(p),x) - a22(mbp(p),x) + a21(mbm(p),t(p)) a12(t(p),x) - a11(bmm(p),mm(p))
    a22(tm(p),x) - a12(bmm(p),tm(p)) a12(mp(p),x) + mu^-1 a11(bmm(p),t(p)) a12(t(p),tm(p))
    a12(mp(p),x) - a31(p,um(x)) - mu a31(p,up(x)) + a31(p,o(x)) a11(o(x),um(x))

[--] a23(x,p) = mu a13(um(x),p) + a13(up(x),p) - a11(um(x),o(x)) a13(o(x),p) - a22(x,tbm(p)) -
    mu a22(x,tbp(p)) + a21(x,mp(p)) a12(mp(p),tbm(p)) + a22(x,mbm(p)) + mu a22(x,mbp(p)) -
    a21(x,t(p)) a12(t(p),mbm(p)) + a22(x,tm(p)) a11(mm(p),bmm(p)) + a21(x,mp(p))
    a21(tm(p),bmm(p)) - a21(x,mp(p)) a21(tm(p),t(p)) a11(t(p),bmm(p))

[--] a3(p) = mu a31(p,bpp(p)) - mu a13(bmm(p),p) + a11(bmm(p),mm(p)) a13(mm(p),p) +
    (a11(bmm(p),t(p)) - mu^-1 a11(bmm(p),mm(p)) a11(mm(p),t(p))) a13(t(p),p) + a2(tbm(p)) +
    a2(mbp(p)) + mu^-1 a11(bmm(p),mm(p)) a2(tm(p)) a11(mm(p),bmm(p)) - a2(tbp(p)) - a2(mbm(p)) -
    mu a22(tbm(p),mbp(p)) + a11(bmm(p),mm(p)) a22(tm(p),mbp(p)) - mu^-1 a11(bmm(p),mm(p))
    a22(tm(p),tbm(p)) + mu a22(mbm(p),tbp(p)) - a21(mbm(p),t(p)) a12(t(p),tbp(p)) + (mu^-1
    a11(bmm(p),mm(p)) a21(tm(p),mp(p)) + a12(bmm(p),tm(p)) - mu^-1 a11(bmm(p),t(p))
    a12(t(p),tm(p))) (a12(mp(p),tbm(p)) + a21(tm(p),bmm(p)) - a21(tm(p),t(p)) a11(t(p),bmm(p)))
    + (a21(tbm(p),mp(p)) + a12(bmm(p),tm(p)) - mu^-1 a11(bmm(p),t(p)) a12(t(p),tm(p)))
    a12(mp(p),mbp(p))

[--] a33(p,q) = mu a23(tbm(p),q) + a23(tbp(p),q) - a21(tbm(p),mp(p)) a13(mp(p),q) - mu
    a23(mbm(p),q) - a23(mbp(p),q) + a21(mbm(p),t(p)) a13(t(p),q) - a11(bmm(p),mm(p))
    a23(tm(p),q) - a12(bmm(p),tm(p)) a13(mp(p),q) + mu^-1 a11(bmm(p),t(p)) a12(t(p),tm(p))
    a13(mp(p),q) + a32(p,tbm(q)) + mu a32(p,tbp(q)) - a31(p,mp(q)) a12(mp(q),tbm(q)) -
    a32(p,mbm(q)) - mu a32(p,mbp(q)) + a31(p,t(q)) a12(t(q),mbm(q)) - a32(p,tm(q))
    a11(mm(q),bmm(q)) - a31(p,mp(q)) a21(tm(q),bmm(q)) + a31(p,mp(q)) a21(tm(q),t(q))
    a11(t(q),bmm(q))

[--] ab1(k,i) = a21(dc(k),i)

[--] a1b(i,k) = a12(i,dc(k))

[--] ab2(k,x) = a22(dc(k),x) - ab1(k,um(x)) - mu ab1(k,up(x)) + ab1(k,o(x)) a11(o(x),um(x))

[--] a2b(x,k) = mu a1b(um(x),k) + a1b(up(x),k) - a11(um(x),o(x)) a1b(o(x),k) - a22(x,dc(k))

[--] ab3(k,p) = a23(dc(k),p) + ab2(k,tbm(p)) + mu ab2(k,tbp(p)) - ab1(k,mp(p)) a12(mp(p),tbm(p))
    - ab2(k,mbm(p)) - mu ab2(k,mbp(p)) + ab1(k,t(p)) a12(t(p),mbm(p)) - ab2(k,tm(p))
    a11(mm(p),bmm(p)) - ab1(k,mp(p)) a21(tm(p),bmm(p)) + ab1(k,mp(p)) a21(tm(p),t(p))
    a11(t(p),bmm(p))

[--] a3b(p,k) = mu a2b(tbm(p),k) + a2b(tbp(p),k) - a21(tbm(p),mp(p)) a1b(mp(p),k) - mu
    a2b(mbm(p),k) - a2b(mbp(p),k) + a21(mbm(p),t(p)) a1b(t(p),k) - a11(bmm(p),mm(p))
    a2b(tm(p),k) - a12(bmm(p),tm(p)) a1b(mp(p),k) + mu^-1 a11(bmm(p),t(p)) a12(t(p),tm(p))
    a1b(mp(p),k) + a32(p,dc(k))

[--] abb(k,l) = a2b(dc(k),l) + ab2(k,dc(l))

[--] ab(k) = a2(dc(k)) - mu ab1(k,sh(k)) + a1b(sh(k),k)

[-+] a31(p,i) = mu a21(tbm(p),i) + a21(tbp(p),i) - a21(tbp(p),mp(p)) a11(mp(p),i) - mu
    a21(mbm(p),i) - a21(mbp(p),i) + a21(mbm(p),t(p)) a11(t(p),i) + mu a21(mbm(p),mm(p))
    a11(mm(p),i) + a21(mbp(p),mp(p)) a11(mp(p),i) - a21(mbm(p),mm(p)) a11(mm(p),t(p))
    a11(t(p),i) - a11(bmp(p),mm(p)) a21(tm(p),i) - a12(bmp(p),tm(p)) a11(mp(p),i) + mu^-1
    a11(bmp(p),t(p)) a12(t(p),tm(p)) a11(mp(p),i)

[-+] a13(i,p) = a12(i,tbm(p)) + mu a12(i,tbp(p)) - a11(i,mp(p)) a12(mp(p),tbp(p)) -
    a12(i,mbm(p)) - mu a12(i,mbp(p)) + a11(i,t(p)) a12(t(p),mbm(p)) + mu^-1 a11(i,mm(p))
    a12(mm(p),mbm(p)) + a11(i,mp(p)) a12(mp(p),mbp(p)) - mu^-1 a11(i,t(p)) a11(t(p),mm(p))
    a12(mm(p),mbm(p)) - a12(i,tm(p)) a11(mm(p),bmp(p)) - a11(i,mp(p)) a21(tm(p),bmp(p)) +
    a11(i,mp(p)) a21(tm(p),t(p)) a11(t(p),bmp(p))

[-+] a32(p,x) = mu a22(tbm(p),x) + a22(tbp(p),x) - a21(tbp(p),mp(p)) a12(mp(p),x) - mu
    a22(mbm(p),x) - a22(mbp(p),x) + a21(mbm(p),t(p)) a12(t(p),x) + mu a21(mbm(p),mm(p))
    a12(mm(p),x) + a21(mbp(p),mp(p)) a12(mp(p),x) - a21(mbm(p),mm(p)) a11(mm(p),t(p))
    a12(t(p),x) - a11(bmp(p),mm(p)) a22(tm(p),x) - a12(bmp(p),tm(p)) a12(mp(p),x) + mu^-1
    a11(bmp(p),t(p)) a12(t(p),tm(p)) a12(mp(p),x) - a31(p,um(x)) - mu a31(p,up(x)) + a31(p,o(x))
    a11(o(x),um(x))

[-+] a23(x,p) = mu a13(um(x),p) + a13(up(x),p) - a11(um(x),o(x)) a13(o(x),p) - a22(x,tbm(p)) -
    mu a22(x,tbp(p)) + a21(x,mp(p)) a12(mp(p),tbp(p)) + a22(x,mbm(p)) + mu a22(x,mbp(p)) -
    a21(x,t(p)) a12(t(p),mbm(p)) - mu^-1 a21(x,mm(p)) a12(mm(p),mbm(p)) - a21(x,mp(p))
    a12(mp(p),mbp(p)) + mu^-1 a21(x,t(p)) a11(t(p),mm(p)) a12(mm(p),mbm(p)) + a22(x,tm(p))
    a11(mm(p),bmp(p)) + a21(x,mp(p)) a21(tm(p),bmp(p)) - a21(x,mp(p)) a21(tm(p),t(p))
    a11(t(p),bmp(p))

[-+] a3(p) = a2(tbp(p)) - a2(tbm(p)) - a2(mbp(p)) + mu a22(tbm(p),mbp(p)) - a11(bmm(p),mm(p))
    mu^-1 (a22(tm(p),tm(p)) - a2(tm(p))) a11(mm(p),bmm(p)) - a11(bmm(p),mm(p))
    (a22(tm(p),mbp(p)) - mu^-1 a22(tm(p),tbm(p))) + ((mu^-1 a11(bmm(p),mm(p)) a21(tm(p),mp(p)) +
    a12(bmm(p),tm(p)) - mu^-1 a11(bmm(p),t(p)) a12(t(p),tm(p))) (a12(mp(p),tm(p))
    a11(mm(p),bmm(p)) + a21(tm(p),mm(p)) a11(mm(p),bmm(p)) - a21(tm(p),t(p)) a11(t(p),mm(p))
    a11(mm(p),bmm(p)))) + mu^-1 ((a11(bmm(p),mm(p)) a12(mm(p),tm(p)) - mu^-1 a11(bmm(p),mm(p))
    a11(mm(p),t(p)) a12(t(p),tm(p)) - mu a12(bmm(p),tm(p)) + a11(bmm(p),t(p)) a12(t(p),tm(p)))
    (a12(mp(p),mbp(p)) + a12(mp(p),tbm(p)) + a21(tm(p),bmm(p)) - a21(tm(p),t(p))
    a11(t(p),bmm(p)))) + (mu^-1 a11(bmm(p),mm(p)) a21(tm(p),mp(p)) - a21(tbm(p),mp(p)))
    a12(mp(p),mbp(p)) - mu a31(p,bpp(p)) + mu a13(bmm(p),p) - a11(bmm(p),mm(p)) a13(mm(p),p) -
    (a11(bmm(p),t(p)) - mu^-1 a11(bmm(p),mm(p)) a11(mm(p),t(p))) a13(t(p),p) - (mu
    a11(bmm(p),mp(p)) - a11(bmm(p),mm(p)) a11(mm(p),mp(p)) - a11(bmm(p),t(p)) a11(t(p),mp(p)) +
    mu^-1 a11(bmm(p),mm(p)) a11(mm(p),t(p)) a11(t(p),mp(p))) a13(mp(p),p) + a31(p,mp(p))
    a11(mp(p),bpp(p)) - mu a22(mbm(p),tbp(p)) + (a11(bmm(p),mm(p)) a11(mm(p),mp(p)) - mu^-1
    a11(bmm(p),mm(p)) a11(mm(p),t(p)) a11(t(p),mp(p)) - mu a11(bmm(p),mp(p)) + a11(bmm(p),t(p))
    a11(t(p),mp(p))) a22(tm(p),mbm(p)) + a22(mbm(p),tm(p)) a11(mp(p),bpp(p)) -
    (a11(bmm(p),mm(p)) a11(mm(p),mp(p)) - mu^-1 a11(bmm(p),mm(p)) a11(mm(p),t(p))
    a11(t(p),mp(p)) - mu a11(bmm(p),mp(p)) + a11(bmm(p),t(p)) a11(t(p),mp(p))) (- mu^-1
    a12(mp(p),tm(p)) a12(mm(p),mbm(p)) + a21(tm(p),t(p)) a12(t(p),mbm(p))) - mu^-1
    (a11(bmm(p),mm(p)) a12(mm(p),tm(p)) - mu a12(bmm(p),tm(p)) + a11(bmm(p),t(p))
    a12(t(p),tm(p)) - mu^-1 a11(bmm(p),mm(p)) a11(mm(p),t(p)) a12(t(p),tm(p))) a12(mm(p),mbm(p))
    - mu^-1 a21(mbm(p),t(p)) a12(t(p),tm(p)) a11(mp(p),bpp(p)) + a21(mbm(p),t(p))
    a12(t(p),tbp(p)) + a21(mbm(p),mm(p)) (a21(tm(p),mp(p)) a11(mp(p),bpp(p)) - mu
    a21(tm(p),bpp(p))) + a2(mbm(p))

[-+] a33(p,q) = mu a23(tbm(p),q) + a23(tbp(p),q) - a21(tbp(p),mp(p)) a13(mp(p),q) - mu
    a23(mbm(p),q) - a23(mbp(p),q) + a21(mbm(p),t(p)) a13(t(p),q) + mu a21(mbm(p),mm(p))
    a13(mm(p),q) + a21(mbp(p),mp(p)) a13(mp(p),q) - a21(mbm(p),mm(p)) a11(mm(p),t(p))
    a13(t(p),q) - a11(bmp(p),mm(p)) a23(tm(p),q) - a12(bmp(p),tm(p)) a13(mp(p),q) + mu^-1
    a11(bmp(p),t(p)) a12(t(p),tm(p)) a13(mp(p),q) + a32(p,tbm(q)) + mu a32(p,tbp(q)) -
    a31(p,mp(q)) a12(mp(q),tbp(q)) - a32(p,mbm(q)) - mu a32(p,mbp(q)) + a31(p,t(q))
    a12(t(q),mbm(q)) + mu^-1 a31(p,mm(q)) a12(mm(q),mbm(q)) + a31(p,mp(q)) a12(mp(q),mbp(q)) -
    mu^-1 a31(p,t(q)) a11(t(q),mm(q)) a12(mm(q),mbm(q)) - a32(p,tm(q)) a11(mm(q),bmp(q)) -
    a31(p,mp(q)) a21(tm(q),bmp(q)) + a31(p,mp(q)) a21(tm(q),t(q)) a11(t(q),bmp(q))

[-+] a3b(p,k) = mu a2b(tbm(p),k) + a2b(tbp(p),k) - a21(tbp(p),mp(p)) a1b(mp(p),k) - mu
    a2b(mbm(p),k) - a2b(mbp(p),k) + a21(mbm(p),t(p)) a1b(t(p),k) + mu a21(mbm(p),mm(p))
    a1b(mm(p),k) + a21(mbp(p),mp(p)) a1b(mp(p),k) - a21(mbm(p),mm(p)) a11(mm(p),t(p))
    a1b(t(p),k) - a11(bmp(p),mm(p)) a2b(tm(p),k) - a12(bmp(p),tm(p)) a1b(mp(p),k) + mu^-1
    a11(bmp(p),t(p)) a12(t(p),tm(p)) a1b(mp(p),k) + a32(p,dc(k))

[-+] ab3(k,p) = a23(dc(k),p) + ab2(k,tbm(p)) + mu ab2(k,tbp(p)) - ab1(k,mp(p)) a12(mp(p),tbp(p))
    - ab2(k,mbm(p)) - mu ab2(k,mbp(p)) + ab1(k,t(p)) a12(t(p),mbm(p)) + mu^-1 ab1(k,mm(p))
    a12(mm(p),mbm(p)) + ab1(k,mp(p)) a12(mp(p),mbp(p)) - mu^-1 ab1(k,t(p)) a11(t(p),mm(p))
    a12(mm(p),mbm(p)) - ab2(k,tm(p)) a11(mm(p),bmp(p)) - ab1(k,mp(p)) a21(tm(p),bmp(p)) +
    ab1(k,mp(p)) a21(tm(p),t(p)) a11(t(p),bmp(p))

[+-] a31(p,i) = mu a21(tbm(p),i) + a21(tbp(p),i) - a21(tbm(p),mm(p)) a11(mm(p),i) - mu
    a21(mbm(p),i) - a21(mbp(p),i) + a21(mbp(p),t(p)) a11(t(p),i) - mu a21(tbm(p),t(p))
    a11(t(p),i) - a21(tbp(p),t(p)) a11(t(p),i) + a21(tbm(p),t(p)) a11(t(p),mm(p)) a11(mm(p),i) -
    a11(bpm(p),mp(p)) a21(tm(p),i) - a12(bpm(p),tm(p)) a11(mm(p),i) + a11(bpm(p),mp(p))
    a21(tm(p),t(p)) a11(t(p),i)

[+-] a13(i,p) = a12(i,tbm(p)) + mu a12(i,tbp(p)) - a11(i,mm(p)) a12(mm(p),tbm(p)) -
    a12(i,mbm(p)) - mu a12(i,mbp(p)) + a11(i,t(p)) a12(t(p),mbp(p)) - mu^-1 a11(i,t(p))
    a12(t(p),tbm(p)) - a11(i,t(p)) a12(t(p),tbp(p)) + mu^-1 a11(i,mm(p)) a11(mm(p),t(p))
    a12(t(p),tbm(p)) - a12(i,tm(p)) a11(mp(p),bpm(p)) - a11(i,mm(p)) a21(tm(p),bpm(p)) + mu^-1
    a11(i,t(p)) a12(t(p),tm(p)) a11(mp(p),bpm(p))

[+-] a32(p,x) = mu a22(tbm(p),x) + a22(tbp(p),x) - a21(tbm(p),mm(p)) a12(mm(p),x) - mu
    a22(mbm(p),x) - a22(mbp(p),x) + a21(mbp(p),t(p)) a12(t(p),x) - mu a21(tbm(p),t(p))
    a12(t(p),x) - a21(tbp(p),t(p)) a12(t(p),x) + a21(tbm(p),t(p)) a11(t(p),mm(p)) a12(mm(p),x) -
    a11(bpm(p),mp(p)) a22(tm(p),x) - a12(bpm(p),tm(p)) a12(mm(p),x) + a11(bpm(p),mp(p))
    a21(tm(p),t(p)) a12(t(p),x) - a31(p,um(x)) - mu a31(p,up(x)) + a31(p,o(x)) a11(o(x),um(x))

[+-] a23(x,p) = mu a13(um(x),p) + a13(up(x),p) - a11(um(x),o(x)) a13(o(x),p) - a22(x,tbm(p)) -
    mu a22(x,tbp(p)) + a21(x,mm(p)) a12(mm(p),tbm(p)) + a22(x,mbm(p)) + mu a22(x,mbp(p)) -
    a21(x,t(p)) a12(t(p),mbp(p)) + mu^-1 a21(x,t(p)) a12(t(p),tbm(p)) + a21(x,t(p))
    a12(t(p),tbp(p)) - mu^-1 a21(x,mm(p)) a11(mm(p),t(p)) a12(t(p),tbm(p)) + a22(x,tm(p))
    a11(mp(p),bpm(p)) + a21(x,mm(p)) a21(tm(p),bpm(p)) - mu^-1 a21(x,t(p)) a12(t(p),tm(p))
    a11(mp(p),bpm(p))

[+-] a3(p) = a2(tbp(p)) - a2(tbm(p)) - a2(mbp(p)) + mu a22(tbm(p),mbp(p)) + a2(mbm(p)) - mu^-1
    a11(bmm(p),mm(p)) a2(tm(p)) a11(mm(p),bmm(p)) - mu a22(mbm(p),tbp(p)) - a11(bmm(p),mm(p))
    a22(tm(p),mbp(p)) - a22(tbm(p),tm(p)) (mu a11(mm(p),bpp(p)) - a11(mm(p),t(p))
    a11(t(p),bpp(p))) + a21(mbm(p),t(p)) a12(t(p),tbp(p)) - (a21(tbm(p),mp(p)) +
    a12(bmm(p),tm(p)) - mu^-1 a11(bmm(p),t(p)) a12(t(p),tm(p))) (a12(mp(p),mbp(p)) + mu
    a21(tm(p),bpp(p))) - mu^-1 a11(bmm(p),mm(p)) (a21(tm(p),mp(p)) + a12(mm(p),tm(p)) - mu^-1
    a11(mm(p),t(p)) a12(t(p),tm(p))) (a12(mp(p),tbm(p)) + a21(tm(p),bmm(p)) - a21(tm(p),t(p))
    a11(t(p),bmm(p))) - mu a31(p,bpp(p)) + mu a13(bmm(p),p) - a11(bmm(p),mm(p)) a13(mm(p),p) +
    a31(p,t(p)) a11(t(p),bpp(p))

[+-] a33(p,q) = mu a23(tbm(p),q) + a23(tbp(p),q) - a21(tbm(p),mm(p)) a13(mm(p),q) - mu
    a23(mbm(p),q) - a23(mbp(p),q) + a21(mbp(p),t(p)) a13(t(p),q) - mu a21(tbm(p),t(p))
    a13(t(p),q) - a21(tbp(p),t(p)) a13(t(p),q) + a21(tbm(p),t(p)) a11(t(p),mm(p)) a13(mm(p),q) -
    a11(bpm(p),mp(p)) a23(tm(p),q) - a12(bpm(p),tm(p)) a13(mm(p),q) + a11(bpm(p),mp(p))
    a21(tm(p),t(p)) a13(t(p),q) + a32(p,tbm(q)) + mu a32(p,tbp(q)) - a31(p,mm(q))
    a12(mm(q),tbm(q)) - a32(p,mbm(q)) - mu a32(p,mbp(q)) + a31(p,t(q)) a12(t(q),mbp(q)) - mu^-1
    a31(p,t(q)) a12(t(q),tbm(q)) - a31(p,t(q)) a12(t(q),tbp(q)) + mu^-1 a31(p,mm(q))
    a11(mm(q),t(q)) a12(t(q),tbm(q)) - a32(p,tm(q)) a11(mp(q),bpm(q)) - a31(p,mm(q))
    a21(tm(q),bpm(q)) + mu^-1 a31(p,t(q)) a12(t(q),tm(q)) a11(mp(q),bpm(q))

[+-] a3b(p,k) = mu a2b(tbm(p),k) + a2b(tbp(p),k) - a21(tbm(p),mm(p)) a1b(mm(p),k) - mu
    a2b(mbm(p),k) - a2b(mbp(p),k) + a21(mbp(p),t(p)) a1b(t(p),k) - mu a21(tbm(p),t(p))
    a1b(t(p),k) - a21(tbp(p),t(p)) a1b(t(p),k) + a21(tbm(p),t(p)) a11(t(p),mm(p)) a1b(mm(p),k) -
    a11(bpm(p),mp(p)) a2b(tm(p),k) - a12(bpm(p),tm(p)) a1b(mm(p),k) + a11(bpm(p),mp(p))
    a21(tm(p),t(p)) a1b(t(p),k) + a32(p,dc(k))

[+-] ab3(k,p) = a23(dc(k),p) + ab2(k,tbm(p)) + mu ab2(k,tbp(p)) - ab1(k,mm(p)) a12(mm(p),tbm(p))
    - ab2(k,mbm(p)) - mu ab2(k,mbp(p)) + ab1(k,t(p)) a12(t(p),mbp(p)) - mu^-1 ab1(k,t(p))
    a12(t(p),tbm(p)) - ab1(k,t(p)) a12(t(p),tbp(p)) + mu^-1 ab1(k,mm(p)) a11(mm(p),t(p))
    a12(t(p),tbm(p)) - ab2(k,tm(p)) a11(mp(p),bpm(p)) - ab1(k,mm(p)) a21(tm(p),bpm(p)) + mu^-1
    ab1(k,t(p)) a12(t(p),tm(p)) a11(mp(p),bpm(p))

[++] a31(p,i) = mu a21(tbm(p),i) + a21(tbp(p),i) - a21(tbp(p),mm(p)) a11(mm(p),i) - mu
    a21(mbm(p),i) - a21(mbp(p),i) + a21(mbp(p),t(p)) a11(t(p),i) - mu a21(tbm(p),t(p))
    a11(t(p),i) - a21(tbp(p),t(p)) a11(t(p),i) + a21(tbp(p),t(p)) a11(t(p),mm(p)) a11(mm(p),i) +
    mu a21(mbm(p),mm(p)) a11(mm(p),i) + a21(mbp(p),mp(p)) a11(mp(p),i) - a21(mbp(p),mp(p))
    a11(mp(p),t(p)) a11(t(p),i) - a11(bpp(p),mp(p)) a21(tm(p),i) - a12(bpp(p),tm(p))
    a11(mm(p),i) + a11(bpp(p),mp(p)) a21(tm(p),t(p)) a11(t(p),i)

[++] a13(i,p) = a12(i,tbm(p)) + mu a12(i,tbp(p)) - a11(i,mm(p)) a12(mm(p),tbp(p)) -
    a12(i,mbm(p)) - mu a12(i,mbp(p)) + a11(i,t(p)) a12(t(p),mbp(p)) - mu^-1 a11(i,t(p))
    a12(t(p),tbm(p)) - a11(i,t(p)) a12(t(p),tbp(p)) + mu^-1 a11(i,mm(p)) a11(mm(p),t(p))
    a12(t(p),tbp(p)) + mu^-1 a11(i,mm(p)) a12(mm(p),mbm(p)) + a11(i,mp(p)) a12(mp(p),mbp(p)) -
    mu^-1 a11(i,t(p)) a11(t(p),mp(p)) a12(mp(p),mbp(p)) - a12(i,tm(p)) a11(mp(p),bpp(p)) -
    a11(i,mm(p)) a21(tm(p),bpp(p)) + mu^-1 a11(i,t(p)) a12(t(p),tm(p)) a11(mp(p),bpp(p))

[++] a32(p,x) = mu a22(tbm(p),x) + a22(tbp(p),x) - a21(tbp(p),mm(p)) a12(mm(p),x) - mu
    a22(mbm(p),x) - a22(mbp(p),x) + a21(mbp(p),t(p)) a12(t(p),x) - mu a21(tbm(p),t(p))
    a12(t(p),x) - a21(tbp(p),t(p)) a12(t(p),x) + a21(tbp(p),t(p)) a11(t(p),mm(p)) a12(mm(p),x) +
    mu a21(mbm(p),mm(p)) a12(mm(p),x) + a21(mbp(p),mp(p)) a12(mp(p),x) - a21(mbp(p),mp(p))
    a11(mp(p),t(p)) a12(t(p),x) - a11(bpp(p),mp(p)) a22(tm(p),x) - a12(bpp(p),tm(p))
    a12(mm(p),x) + a11(bpp(p),mp(p)) a21(tm(p),t(p)) a12(t(p),x) - a31(p,um(x)) - mu
    a31(p,up(x)) + a31(p,o(x)) a11(o(x),um(x))

[++] a23(x,p) = mu a13(um(x),p) + a13(up(x),p) - a11(um(x),o(x)) a13(o(x),p) - a22(x,tbm(p)) -
    mu a22(x,tbp(p)) + a21(x,mm(p)) a12(mm(p),tbp(p)) + a22(x,mbm(p)) + mu a22(x,mbp(p)) -
    a21(x,t(p)) a12(t(p),mbp(p)) + mu^-1 a21(x,t(p)) a12(t(p),tbm(p)) + a21(x,t(p))
    a12(t(p),tbp(p)) - mu^-1 a21(x,mm(p)) a11(mm(p),t(p)) a12(t(p),tbp(p)) - mu^-1 a21(x,mm(p))
    a12(mm(p),mbm(p)) - a21(x,mp(p)) a12(mp(p),mbp(p)) + mu^-1 a21(x,t(p)) a11(t(p),mp(p))
    a12(mp(p),mbp(p)) + a22(x,tm(p)) a11(mp(p),bpp(p)) + a21(x,mm(p)) a21(tm(p),bpp(p)) - mu^-1
    a21(x,t(p)) a12(t(p),tm(p)) a11(mp(p),bpp(p))

[++] a33(p,q) = mu a23(tbm(p),q) + a23(tbp(p),q) - a21(tbp(p),mm(p)) a13(mm(p),q) - mu
    a23(mbm(p),q) - a23(mbp(p),q) + a21(mbp(p),t(p)) a13(t(p),q) - mu a21(tbm(p),t(p))
    a13(t(p),q) - a21(tbp(p),t(p)) a13(t(p),q) + a21(tbp(p),t(p)) a11(t(p),mm(p)) a13(mm(p),q) +
    mu a21(mbm(p),mm(p)) a13(mm(p),q) + a21(mbp(p),mp(p)) a13(mp(p),q) - a21(mbp(p),mp(p))
    a11(mp(p),t(p)) a13(t(p),q) - a11(bpp(p),mp(p)) a23(tm(p),q) - a12(bpp(p),tm(p))
    a13(mm(p),q) + a11(bpp(p),mp(p)) a21(tm(p),t(p)) a13(t(p),q) + a32(p,tbm(q)) + mu
    a32(p,tbp(q)) - a31(p,mm(q)) a12(mm(q),tbp(q)) - a32(p,mbm(q)) - mu a32(p,mbp(q)) +
    a31(p,t(q)) a12(t(q),mbp(q)) - mu^-1 a31(p,t(q)) a12(t(q),tbm(q)) - a31(p,t(q))
    a12(t(q),tbp(q)) + mu^-1 a31(p,mm(q)) a11(mm(q),t(q)) a12(t(q),tbp(q)) + mu^-1 a31(p,mm(q))
    a12(mm(q),mbm(q)) + a31(p,mp(q)) a12(mp(q),mbp(q)) - mu^-1 a31(p,t(q)) a11(t(q),mp(q))
    a12(mp(q),mbp(q)) - a32(p,tm(q)) a11(mp(q),bpp(q)) - a31(p,mm(q)) a21(tm(q),bpp(q)) + mu^-1
    a31(p,t(q)) a12(t(q),tm(q)) a11(mp(q),bpp(q))

[++] a3(p) = a2(tbp(p)) - a2(tbm(p)) - a2(mbp(p)) + mu a22(tbm(p),mbp(p)) - a21(tbm(p),mp(p))
    a12(mp(p),mbp(p)) - mu (a21(tbm(p),mp(p)) + a12(bmm(p),tm(p)) + a21(mbp(p),mp(p)) - mu^-1
    a11(bmm(p),t(p)) a12(t(p),tm(p))) a21(tm(p),bpp(p)) + (a11(bpp(p),mp(p)) a22(tm(p),tm(p)) -
    a11(bpp(p),mp(p)) a2(tm(p)) - mu a22(tbm(p),tm(p)) + a22(mbp(p),tm(p)) - a21(mbp(p),mp(p))
    a12(mp(p),tm(p))) (a11(mm(p),bpp(p)) - mu^-1 a11(mm(p),t(p)) a11(t(p),bpp(p))) + a31(p,t(p))
    a11(t(p),bpp(p)) + a31(p,mm(p)) (a11(mm(p),bpp(p)) - mu^-1 a11(mm(p),t(p)) a11(t(p),bpp(p)))
    - mu a31(p,bpp(p)) + mu a13(bmm(p),p) - mu a22(mbm(p),tbp(p)) + a21(mbm(p),t(p))
    a12(t(p),tbp(p)) + a2(mbm(p))

[++] a3b(p,k) = mu a2b(tbm(p),k) + a2b(tbp(p),k) - a21(tbp(p),mm(p)) a1b(mm(p),k) - mu
    a2b(mbm(p),k) - a2b(mbp(p),k) + a21(mbp(p),t(p)) a1b(t(p),k) - mu a21(tbm(p),t(p))
    a1b(t(p),k) - a21(tbp(p),t(p)) a1b(t(p),k) + a21(tbp(p),t(p)) a11(t(p),mm(p)) a1b(mm(p),k) +
    mu a21(mbm(p),mm(p)) a1b(mm(p),k) + a21(mbp(p),mp(p)) a1b(mp(p),k) - a21(mbp(p),mp(p))
    a11(mp(p),t(p)) a1b(t(p),k) - a11(bpp(p),mp(p)) a2b(tm(p),k) - a12(bpp(p),tm(p))
    a1b(mm(p),k) + a11(bpp(p),mp(p)) a21(tm(p),t(p)) a1b(t(p),k) + a32(p,dc(k))

[++] ab3(k,p) = a23(dc(k),p) + ab2(k,tbm(p)) + mu ab2(k,tbp(p)) - ab1(k,mm(p)) a12(mm(p),tbp(p))
    - ab2(k,mbm(p)) - mu ab2(k,mbp(p)) + ab1(k,t(p)) a12(t(p),mbp(p)) - mu^-1 ab1(k,t(p))
    a12(t(p),tbm(p)) - ab1(k,t(p)) a12(t(p),tbp(p)) + mu^-1 ab1(k,mm(p)) a11(mm(p),t(p))
    a12(t(p),tbp(p)) + mu^-1 ab1(k,mm(p)) a12(mm(p),mbm(p)) + ab1(k,mp(p)) a12(mp(p),mbp(p)) -
    mu^-1 ab1(k,t(p)) a11(t(p),mp(p)) a12(mp(p),mbp(p)) - ab2(k,tm(p)) a11(mp(p),bpp(p)) -
    ab1(k,mm(p)) a21(tm(p),bpp(p)) + mu^-1 ab1(k,t(p)) a12(t(p),tm(p)) a11(mp(p),bpp(p))
)TABLE";
  return text;
}

}  // namespace roseman
