use std::fmt::{self, Write as _};

use super::decompose::{decompose, decompose_with, Decomposition};
use super::params::CoverParams;
use super::tb::MacroLca;
use crate::cartesian::{BinaryTree, NONE};
use crate::error::{Error, Result};
use crate::io::{Persist, Reader, Writer};
use crate::micro_codec::{CodecMode, Codebook, MicroTables, MicroType, TypeArray};
use crate::primitives::{BitVec, IntVec, PiecewiseConstantArray, RankSelect, RawBits};

/// Node address: mini tree, micro tree within the mini tree, and node within
/// the micro tree, each a 1-based preorder number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TauName {
    pub mini: usize,
    pub micro: usize,
    pub local: usize,
}

impl fmt::Display for TauName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.mini, self.micro, self.local)
    }
}

/// Internal address: global micro id and 0-based local preorder.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Loc {
    pub k: usize,
    pub local: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CoverSpace {
    pub micro_payload: usize,
    pub codebook: usize,
    /// Variable-cell directory, piecewise-constant arrays, mini boundaries.
    pub directories: usize,
    /// Per-mini and per-micro tables and the micro-root LCA structure.
    pub macro_tiers: usize,
    /// Per-type query tables, counted for every type present.
    pub lookup_tables: usize,
}

impl CoverSpace {
    pub fn total(&self) -> usize {
        self.micro_payload + self.codebook + self.directories + self.macro_tiers + self.lookup_tables
    }

    /// Everything except the micro-tree payload.
    pub fn auxiliary(&self) -> usize {
        self.total() - self.micro_payload
    }
}

/// Two-tier partition of the mini trees and the micro trees nested in them.
pub fn decompose_nested(t: &BinaryTree, params: CoverParams) -> (Decomposition, Decomposition) {
    let mini = decompose(t, params.mini_b);
    let micro = decompose_with(t, params.micro_b, |p, c| mini.component_of(p) != mini.component_of(c));
    (mini, micro)
}

/// Tree-covering representation of a binary tree: the shape lives in the
/// micro-tree types; everything else is a small directory over them.
///
/// A mini tree's local numbering includes leaf copies of its child mini
/// roots (portals). A micro tree holds only its own nodes; for each child
/// component it records the local parent, the child side, and how many
/// mini-local positions the child subtree occupies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCover {
    n: usize,
    params: CoverParams,
    mini_root_pre: IntVec,
    mini_root_ld: IntVec,
    mini_portal_lp: [IntVec; 2],
    mini_portal_st: [IntVec; 2],
    mini_first: BitVec,
    micro_root_pm: IntVec,
    micro_root_ld: IntVec,
    /// `0` = no portal, else `2·parent + is_right + 1`
    micro_portal_link: [IntVec; 2],
    micro_portal_st: [IntVec; 2],
    macro_lca: MacroLca,
    codebook: Codebook,
    types: TypeArray,
    by_pre: PiecewiseConstantArray,
    by_in: PiecewiseConstantArray,
    local_bits: usize,
}

impl TreeCover {
    pub fn build(t: &BinaryTree, params: CoverParams, mode: CodecMode) -> Result<Self> {
        params.validate()?;
        let n = t.len();
        if n == 0 {
            return Err(Error::Build("cannot cover an empty tree".into()));
        }
        let (dm, du) = decompose_nested(t, params);
        let ld = t.left_depths();
        let st = |v: usize| t.st(v);

        // micro trees ordered by (mini tree, root preorder)
        let mut order: Vec<usize> = (0..du.len()).collect();
        order.sort_by_key(|&o| (dm.component_of(du.root(o)), du.root(o)));
        let mut new_id = vec![0usize; du.len()];
        for (k, &o) in order.iter().enumerate() {
            new_id[o] = k;
        }
        let kk = order.len();

        // position of x in the local preorder of a mini tree rooted at r with portal leaves ps
        let local_pos = |r: usize, ps: [Option<usize>; 2], x: usize| -> usize {
            x - r - ps.iter().flatten().filter(|&&p| p < x).map(|&p| st(p) - 1).sum::<usize>()
        };
        // same for a micro tree, whose portals occupy no local positions
        let micro_pos = |r: usize, ps: [Option<usize>; 2], x: usize| -> usize {
            x - r - ps.iter().flatten().filter(|&&p| p < x).map(|&p| st(p)).sum::<usize>()
        };
        let mini_portals = |m: usize| [dm.portal(m, 0), dm.portal(m, 1)];
        let micro_portals = |o: usize| [du.portal(o, 0), du.portal(o, 1)];
        // subtree size inside the mini tree (child mini subtrees shrink to one leaf)
        let st_mini = |u: usize| -> usize {
            let m = dm.component_of(u);
            st(u) - mini_portals(m).iter().flatten().filter(|&&p| u < p && p < u + st(u)).map(|&p| st(p) - 1).sum::<usize>()
        };

        let mm = dm.len();
        let mut mini_root_pre = Vec::with_capacity(mm);
        let mut mini_root_ld = Vec::with_capacity(mm);
        let mut mini_lp = [vec![0u64; mm], vec![0u64; mm]];
        let mut mini_st = [vec![0u64; mm], vec![0u64; mm]];
        for m in 0..mm {
            let r = dm.root(m);
            mini_root_pre.push(r as u64);
            mini_root_ld.push(ld[r] as u64);
            for side in 0..2 {
                if let Some(p) = dm.portal(m, side) {
                    mini_lp[side][m] = local_pos(r, mini_portals(m), p) as u64;
                    mini_st[side][m] = st(p) as u64;
                }
            }
        }

        let mut micro_root_pm = vec![0u64; kk];
        let mut micro_root_ld = vec![0u64; kk];
        let mut micro_link = [vec![0u64; kk], vec![0u64; kk]];
        let mut micro_st = [vec![0u64; kk], vec![0u64; kk]];
        let mut mini_first = RawBits::zeros(kk);
        let mut local = vec![0u32; n];
        let mut local_in = vec![0u32; n];
        let mut micro_types = Vec::with_capacity(kk);
        let mut members: Vec<Vec<u32>> = vec![Vec::new(); kk];
        for u in 0..n {
            members[new_id[du.component_of(u)]].push(u as u32);
        }
        for (k, &o) in order.iter().enumerate() {
            let rho = du.root(o);
            let m = dm.component_of(rho);
            let mroot = dm.root(m);
            if k == 0 || dm.component_of(du.root(order[k - 1])) != m {
                mini_first.set(k, true);
            }
            micro_root_pm[k] = local_pos(mroot, mini_portals(m), rho) as u64;
            micro_root_ld[k] = (ld[rho] - ld[mroot]) as u64;
            let ps = micro_portals(o);
            let size = members[k].len();
            let mut left = vec![NONE; size];
            let mut right = vec![NONE; size];
            for &u in &members[k] {
                local[u as usize] = micro_pos(rho, ps, u as usize) as u32;
            }
            for &u in &members[k] {
                let u = u as usize;
                let inside = |c: Option<usize>| c.filter(|&c| du.component_of(c) == o).map_or(NONE, |c| local[c]);
                left[local[u] as usize] = inside(t.left(u));
                right[local[u] as usize] = inside(t.right(u));
            }
            for side in 0..2 {
                if let Some(q) = ps[side] {
                    let a = t.parent(q).unwrap();
                    micro_link[side][k] = 2 * local[a] as u64 + u64::from(t.right(a) == Some(q)) + 1;
                    micro_st[side][k] = if dm.component_of(q) != m { 1 } else { st_mini(q) as u64 };
                }
            }
            let shape = BinaryTree::from_preorder_children(left, right);
            for &u in &members[k] {
                local_in[u as usize] = shape.inorder(local[u as usize] as usize) as u32;
            }
            micro_types.push(MicroType::of(&shape)?);
        }

        let mut distinct = micro_types.clone();
        distinct.sort();
        distinct.dedup();
        let mut freqs = vec![0u64; distinct.len()];
        let ids: Vec<usize> = micro_types
            .iter()
            .map(|ty| {
                let id = distinct.binary_search(ty).unwrap();
                freqs[id] += 1;
                id
            })
            .collect();
        let codebook = Codebook::build(mode, distinct, &freqs, params.max_micro_nodes())?;
        let types = TypeArray::new(&codebook, &ids)?;

        let local_bits = crate::primitives::bits_for((params.max_micro_nodes() - 1) as u64);
        let pack = |k: usize, l: u32| ((k as u64) << local_bits) | l as u64;
        let micro_of = |u: usize| new_id[du.component_of(u)];
        let by_pre = run_values(n, |p| (micro_of(p), local[p]), pack)?;
        let by_in = run_values(
            n,
            |i| {
                let u = t.node_at_inorder(i);
                (micro_of(u), local_in[u])
            },
            pack,
        )?;

        let mut tb_left = vec![None; kk];
        let mut tb_right = vec![None; kk];
        for (k, &o) in order.iter().enumerate() {
            tb_left[k] = du.portal(o, 0).map(|q| new_id[du.component_of(q)]);
            tb_right[k] = du.portal(o, 1).map(|q| new_id[du.component_of(q)]);
        }

        Ok(Self {
            n,
            params,
            mini_root_pre: IntVec::from_slice(&mini_root_pre),
            mini_root_ld: IntVec::from_slice(&mini_root_ld),
            mini_portal_lp: mini_lp.map(|v| IntVec::from_slice(&v)),
            mini_portal_st: mini_st.map(|v| IntVec::from_slice(&v)),
            mini_first: BitVec::new(mini_first),
            micro_root_pm: IntVec::from_slice(&micro_root_pm),
            micro_root_ld: IntVec::from_slice(&micro_root_ld),
            micro_portal_link: micro_link.map(|v| IntVec::from_slice(&v)),
            micro_portal_st: micro_st.map(|v| IntVec::from_slice(&v)),
            macro_lca: MacroLca::new(&tb_left, &tb_right),
            codebook,
            types,
            by_pre,
            by_in,
            local_bits,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn params(&self) -> CoverParams {
        self.params
    }

    pub fn codebook(&self) -> &Codebook {
        &self.codebook
    }

    pub fn mini_count(&self) -> usize {
        self.mini_root_pre.len()
    }

    pub fn micro_count(&self) -> usize {
        self.types.len()
    }

    pub fn micro_payload_bits(&self) -> usize {
        self.types.total_payload_bits()
    }

    #[inline]
    fn tables(&self, k: usize) -> &MicroTables {
        self.codebook.tables(self.types.type_id(&self.codebook, k))
    }

    /// 0-based mini tree of micro tree `k`.
    #[inline]
    fn mini_of(&self, k: usize) -> usize {
        self.mini_first.rank1_at(k + 1) - 1
    }

    // ---- τ-name conversion ----

    fn name_of(&self, loc: Loc) -> TauName {
        let m = self.mini_of(loc.k);
        let first = self.mini_first.select_at(true, m);
        TauName {
            mini: m + 1,
            micro: loc.k - first + 1,
            local: loc.local + 1,
        }
    }

    fn loc_of(&self, name: &TauName) -> Result<Loc> {
        let not_found = || Error::InvalidName(format!("no node named {name}"));
        let mc = self.mini_count();
        if name.mini == 0 || name.mini > mc || name.micro == 0 || name.local == 0 {
            return Err(not_found());
        }
        let first = self.mini_first.select_at(true, name.mini - 1);
        let end = if name.mini < mc { self.mini_first.select_at(true, name.mini) } else { self.micro_count() };
        if name.micro > end - first {
            return Err(not_found());
        }
        let k = first + name.micro - 1;
        let l = name.local - 1;
        if l >= self.tables(k).len() {
            return Err(not_found());
        }
        Ok(Loc { k, local: l })
    }

    // ---- core arithmetic on internal addresses ----

    /// Local parent of micro tree `k`'s portal on `side`, and whether the
    /// portal is a right child.
    #[inline]
    fn micro_portal(&self, k: usize, side: usize) -> Option<(usize, bool)> {
        let v = self.micro_portal_link[side].get(k) as usize;
        (v != 0).then(|| ((v - 1) >> 1, (v - 1) & 1 == 1))
    }

    /// Mini-local preorder of a node.
    #[inline]
    fn mini_pos(&self, loc: Loc, tab: &MicroTables) -> usize {
        let k = loc.k;
        let mut pm = self.micro_root_pm.get(k) as usize + loc.local;
        for s in 0..2 {
            if let Some((a, right)) = self.micro_portal(k, s) {
                // first local node after the portal's subtree
                let after = a + 1 + if right { tab.ls(a) } else { 0 };
                if after <= loc.local {
                    pm += self.micro_portal_st[s].get(k) as usize;
                }
            }
        }
        pm
    }

    #[inline]
    fn global_pre(&self, m: usize, pm: usize) -> usize {
        let mut pre = self.mini_root_pre.get(m) as usize + pm;
        for s in 0..2 {
            let lp = self.mini_portal_lp[s].get(m) as usize;
            if lp != 0 && lp < pm {
                pre += self.mini_portal_st[s].get(m) as usize - 1;
            }
        }
        pre
    }

    /// 0-based global preorder.
    #[inline]
    pub(crate) fn pre_rank0(&self, loc: Loc) -> usize {
        self.global_pre(self.mini_of(loc.k), self.mini_pos(loc, self.tables(loc.k)))
    }

    /// 0-based global inorder, via `inorder = preorder + ls − leftdepth`.
    #[inline]
    pub(crate) fn in_rank0(&self, loc: Loc) -> usize {
        let (k, l) = (loc.k, loc.local);
        let m = self.mini_of(k);
        let tab = self.tables(k);
        let ls_local = tab.ls(l);
        let mut ls = ls_local;
        for s in 0..2 {
            if let Some((a, right)) = self.micro_portal(k, s) {
                if (a == l && !right) || (l < a && a <= l + ls_local) {
                    ls += self.micro_portal_st[s].get(k) as usize;
                }
            }
        }
        let pm = self.mini_pos(loc, tab);
        let ls_mini = ls;
        for s in 0..2 {
            let lp = self.mini_portal_lp[s].get(m) as usize;
            if lp != 0 && pm < lp && lp <= pm + ls_mini {
                ls += self.mini_portal_st[s].get(m) as usize - 1;
            }
        }
        let ld = self.mini_root_ld.get(m) as usize + self.micro_root_ld.get(k) as usize + tab.left_depth(l);
        (self.global_pre(m, pm) + ls).wrapping_sub(ld)
    }

    #[inline]
    fn unpack(&self, v: u64) -> (usize, usize) {
        ((v >> self.local_bits) as usize, (v & ((1 << self.local_bits) - 1)) as usize)
    }

    #[inline]
    pub(crate) fn pre_select0(&self, p: usize) -> Loc {
        let (v, run) = self.by_pre.get_with_runlen0(p);
        let (k, base) = self.unpack(v);
        Loc { k, local: base + run - 1 }
    }

    #[inline]
    pub(crate) fn in_select0(&self, i: usize) -> Loc {
        let (v, run) = self.by_in.get_with_runlen0(i);
        let (k, base) = self.unpack(v);
        Loc {
            k,
            local: self.tables(k).node_at_inorder(base + run - 1),
        }
    }

    /// Local position standing in for `x` inside micro tree `k`, an ancestor of `x`'s micro tree.
    #[inline]
    fn entry(&self, k: usize, x: Loc) -> usize {
        if x.k == k {
            return x.local;
        }
        let side = usize::from(self.macro_lca.position(x.k) > self.macro_lca.position(k));
        (self.micro_portal_link[side].get(k) as usize - 1) >> 1
    }

    #[inline]
    pub(crate) fn lca_loc(&self, a: Loc, b: Loc) -> Loc {
        if a.k == b.k {
            return Loc {
                k: a.k,
                local: self.tables(a.k).lca(a.local, b.local),
            };
        }
        let k = self.macro_lca.lca(a.k, b.k);
        Loc {
            k,
            local: self.tables(k).lca(self.entry(k, a), self.entry(k, b)),
        }
    }

    // ---- public queries (1-based indices) ----

    pub fn nodeselect_preorder(&self, p: usize) -> Result<TauName> {
        crate::error::check_index(p, self.n)?;
        Ok(self.name_of(self.pre_select0(p - 1)))
    }

    pub fn noderank_preorder(&self, v: &TauName) -> Result<usize> {
        Ok(self.pre_rank0(self.loc_of(v)?) + 1)
    }

    pub fn nodeselect_inorder(&self, i: usize) -> Result<TauName> {
        crate::error::check_index(i, self.n)?;
        Ok(self.name_of(self.in_select0(i - 1)))
    }

    pub fn noderank_inorder(&self, v: &TauName) -> Result<usize> {
        Ok(self.in_rank0(self.loc_of(v)?) + 1)
    }

    pub fn lca(&self, u: &TauName, v: &TauName) -> Result<TauName> {
        let (a, b) = (self.loc_of(u)?, self.loc_of(v)?);
        Ok(self.name_of(self.lca_loc(a, b)))
    }

    pub fn space(&self) -> CoverSpace {
        let ints = |vs: &[&IntVec]| vs.iter().map(|v| v.size_bits()).sum::<usize>();
        let pca = |p: &PiecewiseConstantArray| p.space().total();
        CoverSpace {
            micro_payload: self.types.total_payload_bits(),
            codebook: self.codebook.size_bits(),
            directories: self.types.space().directory + pca(&self.by_pre) + pca(&self.by_in) + self.mini_first.space().total(),
            macro_tiers: ints(&[
                &self.mini_root_pre,
                &self.mini_root_ld,
                &self.mini_portal_lp[0],
                &self.mini_portal_lp[1],
                &self.mini_portal_st[0],
                &self.mini_portal_st[1],
                &self.micro_root_pm,
                &self.micro_root_ld,
                &self.micro_portal_link[0],
                &self.micro_portal_link[1],
                &self.micro_portal_st[0],
                &self.micro_portal_st[1],
            ]) + self.macro_lca.size_bits(),
            lookup_tables: self.codebook.table_bits(),
        }
    }

    /// Human-readable listing of both tiers.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "n={} micro_b={} mini_b={} codec={} minis={} micros={} types={}",
            self.n,
            self.params.micro_b,
            self.params.mini_b,
            self.codebook.mode(),
            self.mini_count(),
            self.micro_count(),
            self.codebook.len()
        );
        let side = |lp: u64, st: u64| if lp == 0 { "-".to_string() } else { format!("@{lp}+{st}") };
        let link = |v: u64, st: u64| match v {
            0 => "-".to_string(),
            v => format!("{}.{}+{st}", (v - 1) / 2 + 1, if v % 2 == 0 { 'R' } else { 'L' }),
        };
        for m in 0..self.mini_count() {
            let _ = writeln!(
                s,
                "mini {}: root preorder {} left-depth {} portals L {} R {}",
                m + 1,
                self.mini_root_pre.get(m) + 1,
                self.mini_root_ld.get(m),
                side(self.mini_portal_lp[0].get(m), self.mini_portal_st[0].get(m)),
                side(self.mini_portal_lp[1].get(m), self.mini_portal_st[1].get(m)),
            );
        }
        for k in 0..self.micro_count() {
            let name = self.name_of(Loc { k, local: 0 });
            let id = self.types.type_id(&self.codebook, k);
            let _ = writeln!(
                s,
                "micro {} ({},{}): root at mini-local {} type {} [{} bits] portals L {} R {}",
                k + 1,
                name.mini,
                name.micro,
                self.micro_root_pm.get(k) + 1,
                self.codebook.types()[id],
                self.codebook.code_len(id),
                link(self.micro_portal_link[0].get(k), self.micro_portal_st[0].get(k)),
                link(self.micro_portal_link[1].get(k), self.micro_portal_st[1].get(k)),
            );
        }
        s
    }

    /// Field-level consistency of a loaded cover, then a full sweep of both
    /// rank/select pairs, so that a corrupt file is rejected up front.
    fn check(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Format(format!("tree cover: {m}")));
        let (n, mc, kc) = (self.n, self.mini_count(), self.micro_count());
        if self.params.validate().is_err() || self.codebook.max_nodes() != self.params.max_micro_nodes() {
            return bad("parameters");
        }
        if self.local_bits != crate::primitives::bits_for((self.params.max_micro_nodes() - 1) as u64) {
            return bad("local field width");
        }
        let mini_ok = [&self.mini_root_ld, &self.mini_portal_lp[0], &self.mini_portal_lp[1], &self.mini_portal_st[0], &self.mini_portal_st[1]]
            .iter()
            .all(|v| v.len() == mc);
        let micro_ok = [&self.micro_root_ld, &self.micro_root_pm, &self.micro_portal_link[0], &self.micro_portal_link[1], &self.micro_portal_st[0], &self.micro_portal_st[1]]
            .iter()
            .all(|v| v.len() == kc);
        if n == 0 || !mini_ok || !micro_ok || self.mini_first.len() != kc || self.mini_first.count_ones() != mc || kc == 0 || !self.mini_first.get_bit(0) {
            return bad("table lengths");
        }
        if self.macro_lca.len() != kc || self.by_pre.len() != n || self.by_in.len() != n {
            return bad("directory lengths");
        }
        self.types.check(&self.codebook)?;
        let fits = |v: u64| v as usize <= n;
        for v in [&self.mini_root_pre, &self.mini_root_ld, &self.mini_portal_st[0], &self.mini_portal_st[1], &self.mini_portal_lp[0], &self.mini_portal_lp[1]] {
            if !v.iter().all(fits) {
                return bad("mini table value out of range");
            }
        }
        for v in [&self.micro_root_pm, &self.micro_root_ld, &self.micro_portal_st[0], &self.micro_portal_st[1]] {
            if !v.iter().all(fits) {
                return bad("micro table value out of range");
            }
        }
        let paired = |lp: &IntVec, st: &IntVec| (0..lp.len()).all(|i| (lp.get(i) == 0) == (st.get(i) == 0));
        if !(0..2).all(|s| paired(&self.mini_portal_lp[s], &self.mini_portal_st[s]) && paired(&self.micro_portal_link[s], &self.micro_portal_st[s])) {
            return bad("portal without size");
        }
        for k in 0..kc {
            let size = self.tables(k).len();
            if (0..2).any(|s| self.micro_portal(k, s).is_some_and(|(a, _)| a >= size)) {
                return bad("portal outside its micro tree");
            }
        }
        for (pca, inorder) in [(&self.by_pre, false), (&self.by_in, true)] {
            for i in 0..n {
                let (v, run) = pca.get_with_runlen0(i);
                let (k, base) = self.unpack(v);
                if k >= kc || base + run > self.tables(k).len() {
                    return bad("directory entry out of range");
                }
                let loc = if inorder { self.in_select0(i) } else { self.pre_select0(i) };
                let back = if inorder { self.in_rank0(loc) } else { self.pre_rank0(loc) };
                if back != i {
                    return bad("rank/select sweep failed");
                }
            }
        }
        Ok(())
    }
}

/// Piecewise-constant array whose runs are maximal stretches of consecutive
/// local positions in one micro tree; each run stores its first position.
fn run_values(n: usize, at: impl Fn(usize) -> (usize, u32), pack: impl Fn(usize, u32) -> u64) -> Result<PiecewiseConstantArray> {
    let mut vals = Vec::with_capacity(n);
    let mut prev: Option<(usize, u32, u64)> = None;
    for i in 0..n {
        let (k, l) = at(i);
        let v = match prev {
            Some((pk, pl, pv)) if pk == k && l == pl + 1 => pv,
            Some((_, _, pv)) => {
                let v = pack(k, l);
                if v == pv {
                    return Err(Error::Build("adjacent runs would merge".into()));
                }
                v
            }
            None => pack(k, l),
        };
        vals.push(v);
        prev = Some((k, l, v));
    }
    Ok(PiecewiseConstantArray::new(&vals))
}

impl Persist for TreeCover {
    fn write_to(&self, w: &mut Writer) {
        w.section(b"TCOV", 1, |w| {
            w.put_u64(self.n as u64);
            w.put_u64(self.params.micro_b as u64);
            w.put_u64(self.params.mini_b as u64);
            w.put_u8(self.local_bits as u8);
            for v in [&self.mini_root_pre, &self.mini_root_ld, &self.mini_portal_lp[0], &self.mini_portal_lp[1], &self.mini_portal_st[0], &self.mini_portal_st[1]] {
                v.write_to(w);
            }
            self.mini_first.write_to(w);
            for v in [&self.micro_root_pm, &self.micro_root_ld, &self.micro_portal_link[0], &self.micro_portal_link[1], &self.micro_portal_st[0], &self.micro_portal_st[1]] {
                v.write_to(w);
            }
            self.macro_lca.write_to(w);
            self.codebook.write_to(w);
            self.types.write_to(w);
            self.by_pre.write_to(w);
            self.by_in.write_to(w);
        });
    }

    fn read_from(r: &mut Reader<'_>) -> Result<Self> {
        let mut s = r.section(b"TCOV", 1)?;
        let n = s.get_usize()?;
        let params = CoverParams {
            micro_b: s.get_usize()?,
            mini_b: s.get_usize()?,
        };
        params.validate().map_err(|e| Error::Format(e.to_string()))?;
        let local_bits = s.get_u8()? as usize;
        let ints = |s: &mut Reader<'_>| IntVec::read_from(s);
        let mini_root_pre = ints(&mut s)?;
        let mini_root_ld = ints(&mut s)?;
        let mini_portal_lp = [ints(&mut s)?, ints(&mut s)?];
        let mini_portal_st = [ints(&mut s)?, ints(&mut s)?];
        let mini_first = BitVec::read_from(&mut s)?;
        let micro_root_pm = ints(&mut s)?;
        let micro_root_ld = ints(&mut s)?;
        let micro_portal_link = [ints(&mut s)?, ints(&mut s)?];
        let micro_portal_st = [ints(&mut s)?, ints(&mut s)?];
        let macro_lca = MacroLca::read_from(&mut s)?;
        let codebook = Codebook::read_from(&mut s)?;
        let types = TypeArray::read_from(&mut s)?;
        let by_pre = PiecewiseConstantArray::read_from(&mut s)?;
        let by_in = PiecewiseConstantArray::read_from(&mut s)?;
        s.finish()?;
        let c = Self {
            n,
            params,
            mini_root_pre,
            mini_root_ld,
            mini_portal_lp,
            mini_portal_st,
            mini_first,
            micro_root_pm,
            micro_root_ld,
            micro_portal_link,
            micro_portal_st,
            macro_lca,
            codebook,
            types,
            by_pre,
            by_in,
            local_bits,
        };
        c.check()?;
        Ok(c)
    }
}
