use sutured_floer::openbook::fixtures::basic_slice;
use sutured_floer::openbook::parallel::Occupancy;
use sutured_floer::surface::arrangement::{Arrangement, Frontier};

fn main() {
    let (pob, basis) = basic_slice().unwrap();
    let g = pob.curves["g"].clone();
    let a = basis.arcs[0].clone();
    let mut occ = Occupancy::new();
    occ.add_path(&pob.page, &a);
    occ.add_path(&pob.page, &g);
    let t1 = sutured_floer::openbook::twist::dehn_twist(&pob.page, &mut occ, &a, &g, 1, &[]).unwrap();
    let arr = Arrangement::build(&pob.page, &[t1.clone()], &Default::default()).unwrap();
    println!("self-crossings: {}", arr.crossings.len());
    for (rid, r) in arr.regions.iter().enumerate() {
        let fr: Vec<String> = r.frontier.iter().map(|cyc| {
            cyc.iter().map(|f| match f {
                Frontier::Curve { curve, segment, forward } =>
                    format!("c{curve}s{segment}{}", if *forward {"+"} else {"-"}),
                Frontier::Side { side } => format!("S{}", pob.page.side_name(*side)),
            }).collect::<Vec<_>>().join(" ")
        }).collect();
        println!("region {rid}: chi={} corners={:?} bdry={} | {:?}",
            r.chi, r.corners, r.touches_boundary, fr);
    }
    println!("schedule: {:?}", arr.schedules[0]);
    for (cid, cr) in arr.crossings.iter().enumerate() {
        println!("crossing {cid}: chords {} x {} sign {}", cr.a.1, cr.b.1, cr.sign_ab());
    }
}
