use fixpt_core::{
    are_orthogonal, completion_idempotent, dim_fixed, fixed_space, is_idempotent, outer, rank,
    Error, GaussianRational, Matrix, Sampler, Subspace,
};

#[test]
fn outer_product_acts_as_functional_times_vector() {
    let mut rng = Sampler::new(41);
    for _ in 0..50 {
        let n = 1 + rng.index(5);
        let x = rng.nonzero_vector(n);
        let f = rng.nonzero_vector(n).transpose();
        let y = rng.vector(n);
        let fy = (&f * &y).get(0, 0).clone();
        assert_eq!(&outer(&x, &f).unwrap() * &y, x.scale(&fy));
    }
}

#[test]
fn idempotent_exactly_when_pairing_is_one() {
    let mut rng = Sampler::new(42);
    let mut seen = [0usize; 2];
    for t in 0..50 {
        let n = 2 + rng.index(3);
        let x = rng.nonzero_vector(n);
        let mut f = rng.nonzero_vector(n).transpose();
        // Force f(x) = 1 on every other trial when possible.
        let pairing = (&f * &x).get(0, 0).clone();
        if t % 2 == 0 {
            if let Some(inv) = pairing.inv() {
                f = f.scale(&inv);
            }
        }
        let pairing = (&f * &x).get(0, 0).clone();
        let p = outer(&x, &f).unwrap();
        assert_eq!(is_idempotent(&p).unwrap(), pairing.is_one());
        if pairing.is_one() {
            seen[0] += 1;
            assert_eq!(fixed_space(&p).unwrap(), Subspace::span(&x));
        } else {
            seen[1] += 1;
            assert_eq!(dim_fixed(&p).unwrap(), 0);
        }
    }
    assert!(seen[0] >= 20 && seen[1] >= 20, "{seen:?}");
}

#[test]
fn completion_on_seeded_pairs() {
    let mut rng = Sampler::new(43);
    let mut done = 0;
    while done < 100 {
        let n = 2 + rng.index(4);
        let a = rng.mixed_matrix(n);
        let x = rng.nonzero_vector(n);
        let ax = &a * &x;
        let independent = rank(&Matrix::hstack(&[&x, &ax]).unwrap()) == 2;
        match completion_idempotent(&a, &x) {
            Ok(p) => {
                assert!(independent);
                assert_eq!(rank(&p), 1);
                assert_eq!(&p * &p, p);
                assert_eq!(&(&a + &p) * &x, x);
                done += 1;
            }
            Err(e) => {
                assert_eq!(e, Error::DependentPair);
                assert!(!independent);
            }
        }
    }
}

#[test]
fn eigenvector_pairs_are_rejected() {
    let a = Matrix::diagonal(vec![GaussianRational::from(2), GaussianRational::one(), GaussianRational::zero()]);
    for k in 0..3 {
        let x = Matrix::basis_vector(3, k);
        assert_eq!(completion_idempotent(&a, &x), Err(Error::DependentPair));
    }
}

#[test]
fn orthogonal_pairs_have_two_dimensional_fixed_space() {
    let mut rng = Sampler::new(44);
    for _ in 0..30 {
        let n = 2 + rng.index(3);
        let (p, q) = rng.orthogonal_pair(n);
        assert!(are_orthogonal(&p, &q).unwrap());
        assert!(is_idempotent(&p).unwrap() && is_idempotent(&q).unwrap());
        assert_eq!(dim_fixed(&(&p + &q)).unwrap(), 2);
        assert!(!are_orthogonal(&p, &p).unwrap());
    }
}
