use alloc::collections::BTreeMap;
use core::cell::RefCell;

/// Per-owner evaluation cache. Not shared across threads; values are
/// computed outside the borrow so recursive evaluation is fine.
pub(crate) struct Memo<K, V> {
    table: RefCell<BTreeMap<K, V>>,
}

impl<K: Ord + Clone, V: Clone> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo {
            table: RefCell::new(BTreeMap::new()),
        }
    }

    pub(crate) fn get_or_compute(&self, key: &K, compute: impl FnOnce() -> V) -> V {
        if let Some(v) = self.table.borrow().get(key) {
            return v.clone();
        }
        let v = compute();
        self.table.borrow_mut().insert(key.clone(), v.clone());
        v
    }

    pub(crate) fn len(&self) -> usize {
        self.table.borrow().len()
    }
}
